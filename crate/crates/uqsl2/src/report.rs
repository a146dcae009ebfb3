//! Per-identity check records shared by the verification functions.

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;

/// Outcome of checking one named identity on one module.
///
/// Serializes as `{"identity": "...", "d": 2, "pass": true}`; a failing
/// check additionally carries a `counterexample` string with the first
/// differing matrix coordinate and both values.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub d: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    /// Records whether `left == right` entrywise; on failure the first
    /// differing coordinate is kept.
    pub fn of_matrices(identity: impl Into<String>, d: usize, left: &Matrix, right: &Matrix) -> Self {
        match left.first_difference(right) {
            None => IdentityCheck { identity: identity.into(), d, pass: true, counterexample: None },
            Some((i, j, a, b)) => IdentityCheck {
                identity: identity.into(),
                d,
                pass: false,
                counterexample: Some(format!("entry ({i},{j}): left = {a}, right = {b}")),
            },
        }
    }

    /// Records a boolean condition with an explanation used on failure.
    pub fn of_condition(identity: impl Into<String>, d: usize, pass: bool, on_fail: impl Into<String>) -> Self {
        IdentityCheck {
            identity: identity.into(),
            d,
            pass,
            counterexample: if pass { None } else { Some(on_fail.into()) },
        }
    }

    /// Records an identity that could not even be evaluated (for example a
    /// q-exponential of a non-nilpotent argument): always a failure.
    pub fn of_error(identity: impl Into<String>, d: usize, err: impl std::fmt::Display) -> Self {
        IdentityCheck {
            identity: identity.into(),
            d,
            pass: false,
            counterexample: Some(format!("evaluation error: {err}")),
        }
    }
}
