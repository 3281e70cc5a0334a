use serde::Serialize;

/// Result of verifying one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    /// q-order the comparison ran to.
    pub order: i64,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
    /// Wall time in milliseconds.
    pub ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Equal,
    Mismatch,
}

/// The smallest differing coefficient, with its marker term when the
/// identity carries markers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub q_exp: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_exp: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_exp: Option<i64>,
    pub lhs: String,
    pub rhs: String,
}

impl VerificationReport {
    pub fn is_equal(&self) -> bool {
        self.outcome == Outcome::Equal
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        match (&self.outcome, &self.mismatch) {
            (Outcome::Equal, _) => {
                format!("{:<28} equal      (order {:>3}, {} ms)", self.id, self.order, self.ms)
            }
            (Outcome::Mismatch, Some(m)) => {
                let marker = match (m.z_exp, m.a_exp) {
                    (Some(z), Some(a)) => format!(" z^{z} a^{a}"),
                    (Some(z), None) => format!(" z^{z}"),
                    (None, Some(a)) => format!(" a^{a}"),
                    (None, None) => String::new(),
                };
                format!(
                    "{:<28} MISMATCH at q^{}{}: lhs = {}, rhs = {} (order {}, {} ms)",
                    self.id, m.q_exp, marker, m.lhs, m.rhs, self.order, self.ms
                )
            }
            (Outcome::Mismatch, None) => format!("{:<28} MISMATCH", self.id),
        }
    }
}
