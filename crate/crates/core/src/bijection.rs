//! The vector-partition correspondence behind the k-bar rank.
//!
//! An overpartition decomposes uniquely into a quadruple
//! `(gamma, delta, alpha, beta)`: `gamma` is the staircase `(N, ..., 1)`
//! with `N` the generalized Durfee size, `delta` collects distinct
//! non-negative parts below `N`, and `alpha`, `beta` are partitions with
//! parts at most `N`. The k-bar rank, k-conjugation, and the self-conjugacy
//! test all live on this decomposition.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{
    durfee_sizes, generalized_durfee, parts_below_durfee, Overpartition, Partition,
};

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[derive(Deserialize)]
struct RawVector {
    gamma_len: u32,
    delta: Vec<u32>,
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

/// The quadruple `(gamma, delta, alpha, beta)` with `gamma = (N, ..., 1)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawVector")]
pub struct VectorPartition {
    gamma_len: u32,
    delta: Vec<u32>,
    alpha: Partition,
    beta: Partition,
}

impl TryFrom<RawVector> for VectorPartition {
    type Error = Error;

    fn try_from(raw: RawVector) -> Result<Self> {
        VectorPartition::new(
            raw.gamma_len,
            raw.delta,
            Partition::new(raw.alpha)?,
            Partition::new(raw.beta)?,
        )
    }
}

impl VectorPartition {
    pub fn new(gamma_len: u32, delta: Vec<u32>, alpha: Partition, beta: Partition) -> Result<Self> {
        let n = gamma_len;
        if !delta.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::Validation(
                "delta must be strictly decreasing".into(),
            ));
        }
        if delta.iter().any(|&s| s >= n) {
            return Err(Error::Validation(format!(
                "delta parts must lie in [0, {})",
                n
            )));
        }
        if alpha.first() > n || beta.first() > n {
            return Err(Error::Validation(format!(
                "alpha and beta parts must be at most {n}"
            )));
        }
        Ok(VectorPartition {
            gamma_len,
            delta,
            alpha,
            beta,
        })
    }

    pub fn empty() -> Self {
        VectorPartition {
            gamma_len: 0,
            delta: Vec::new(),
            alpha: Partition::empty(),
            beta: Partition::empty(),
        }
    }

    /// `N = l(gamma)`.
    pub fn gamma_len(&self) -> u32 {
        self.gamma_len
    }

    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    /// `|gamma| + |delta| + |alpha| + |beta|`.
    pub fn weight(&self) -> u64 {
        let n = self.gamma_len as u64;
        n * (n + 1) / 2
            + self.delta.iter().map(|&s| s as u64).sum::<u64>()
            + self.alpha.weight()
            + self.beta.weight()
    }
}

/// Forward direction of the correspondence: assemble the overpartition of
/// a vector partition.
///
/// The staircase is added to the conjugate of `alpha` (zero-padded to
/// length `N`), every part is overlined, each `s` in `delta` is added to
/// the part that started as `sigma_{s+1}` and strips its overline, and
/// `beta` is appended.
pub fn vector_to_over(v: &VectorPartition) -> Overpartition {
    let n = v.gamma_len as usize;
    let alpha_conj = v.alpha.conjugate();
    let mut sigma: Vec<u32> = (0..n)
        .map(|i| alpha_conj.row(i + 1) + (n - i) as u32)
        .collect();
    let mut overlined = vec![true; n];
    for &s in &v.delta {
        let idx = s as usize;
        sigma[idx] += s;
        overlined[idx] = false;
    }
    let over: Vec<u32> = (0..n).filter(|&i| overlined[i]).map(|i| sigma[i]).collect();
    let mut plain: Vec<u32> = (0..n).filter(|&i| !overlined[i]).map(|i| sigma[i]).collect();
    debug_assert!(plain.iter().all(|&p| p as usize >= n));
    plain.extend_from_slice(v.beta.parts());
    let lambda = Overpartition::assemble(&over, &plain)
        .expect("forward construction yields a valid overpartition");
    debug_assert_eq!(lambda.weight(), v.weight());
    lambda
}

/// Inverse direction: decompose an overpartition into its vector
/// partition. Total on overpartitions and exactly inverse to
/// [`vector_to_over`].
pub fn over_to_vector(lambda: &Overpartition) -> VectorPartition {
    let j = lambda.overline_count();
    let n = generalized_durfee(lambda) as usize;

    let rho = lambda.overlined_values();
    let plain = lambda.plain_values();
    let mu = &plain[..n - j];
    let beta = Partition::new(plain[n - j..].to_vec()).expect("suffix is sorted");

    let mut sigma: Vec<i64> = rho.iter().map(|&v| v as i64).collect();
    let mut delta: Vec<u32> = Vec::with_capacity(n - j);
    for t in (j + 1..=n).rev() {
        let lam_t = mu[t - j - 1] as i64;
        // largest s with lam_t - t - s + j + 1 < sigma_s, where sigma_0 is
        // infinite; the new part lands right after position s
        let value = |s: i64| lam_t - t as i64 - s + j as i64 + 1;
        let mut s = sigma.len();
        while s > 0 && value(s as i64) >= sigma[s - 1] {
            s -= 1;
        }
        sigma.insert(s, value(s as i64));
        delta.push((t + s) as u32 - j as u32 - 1);
    }

    debug_assert_eq!(sigma.len(), n);
    debug_assert!(sigma.windows(2).all(|w| w[0] > w[1]));
    let eta: Vec<u32> = (0..n)
        .map(|i| {
            let e = sigma[i] - (n - i) as i64;
            debug_assert!(e >= 0, "eta entry below zero in {lambda}");
            e as u32
        })
        .collect();
    let alpha = Partition::from_unsorted(eta).conjugate();

    delta.sort_unstable_by(|a, b| b.cmp(a));
    VectorPartition::new(n as u32, delta, alpha, beta)
        .expect("inverse construction yields a valid vector partition")
}

/// The k-bar rank of an overpartition for `k >= 2`: with
/// `nu(lambda) = (gamma, delta, alpha, beta)`, the number of parts of
/// `alpha` not exceeding `n_{k-2}(beta)` minus the number of parts of
/// `beta` below its `(k-2)`-th Durfee square (`n_0` infinite).
pub fn kbar_rank(lambda: &Overpartition, k: u32) -> Result<i64> {
    if k < 2 {
        return Err(Error::Usage(format!("k-bar rank requires k >= 2, got {k}")));
    }
    let v = over_to_vector(lambda);
    Ok(kbar_rank_of_vector(&v, k))
}

/// Same statistic read directly off a vector partition.
pub fn kbar_rank_of_vector(v: &VectorPartition, k: u32) -> i64 {
    debug_assert!(k >= 2);
    let d = (k - 2) as usize;
    if d == 0 {
        return v.alpha.len() as i64 - v.beta.len() as i64;
    }
    let sizes = durfee_sizes(&v.beta, d);
    let n_d = sizes[d - 1];
    let s = v.alpha.parts().iter().filter(|&&p| p <= n_d).count() as i64;
    let (t, _) = parts_below_durfee(&v.beta, d);
    s - t as i64
}

/// k-conjugation: exchange the parts of `alpha` counted by `s_{k-2}` with
/// the parts of `beta` counted by `t_{k-2}`. For `k = 2` this swaps
/// `alpha` and `beta` entirely.
pub fn k_conjugate(v: &VectorPartition, k: u32) -> Result<VectorPartition> {
    if k < 2 {
        return Err(Error::Usage(format!(
            "k-conjugation requires k >= 2, got {k}"
        )));
    }
    let d = (k - 2) as usize;
    if d == 0 {
        return VectorPartition::new(
            v.gamma_len,
            v.delta.clone(),
            v.beta.clone(),
            v.alpha.clone(),
        );
    }
    let sizes = durfee_sizes(&v.beta, d);
    let n_d = sizes[d - 1];
    let consumed: usize = sizes.iter().map(|&s| s as usize).sum();

    let beta_keep: Vec<u32> = v.beta.parts()[..consumed.min(v.beta.len())].to_vec();
    let beta_swap: Vec<u32> = v.beta.parts()[consumed.min(v.beta.len())..].to_vec();
    let alpha_keep: Vec<u32> = v.alpha.parts().iter().copied().filter(|&p| p > n_d).collect();
    let mut alpha_swap: Vec<u32> = v.alpha.parts().iter().copied().filter(|&p| p <= n_d).collect();

    let mut new_alpha = alpha_keep;
    new_alpha.extend_from_slice(&beta_swap);
    let mut new_beta = beta_keep;
    alpha_swap.sort_unstable_by(|a, b| b.cmp(a));
    new_beta.extend_from_slice(&alpha_swap);

    let new_beta = Partition::new(new_beta).map_err(|e| {
        Error::Validation(format!("k-conjugation produced an invalid beta: {e}"))
    })?;
    VectorPartition::new(
        v.gamma_len,
        v.delta.clone(),
        Partition::from_unsorted(new_alpha),
        new_beta,
    )
}

/// True if the overpartition is fixed by k-conjugation.
pub fn is_self_k_conjugate(lambda: &Overpartition, k: u32) -> Result<bool> {
    let v = over_to_vector(lambda);
    Ok(k_conjugate(&v, k)? == v)
}
