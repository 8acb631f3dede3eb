use std::fmt;

use serde::{Deserialize, Serialize};

use crate::elemset::Elem;

/// A concrete failure of a checked property: a short description plus the
/// elements that exhibit it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub detail: String,
    pub elements: Vec<Elem>,
}

impl Counterexample {
    pub fn new(detail: impl Into<String>, elements: impl IntoIterator<Item = Elem>) -> Self {
        Counterexample {
            detail: detail.into(),
            elements: elements.into_iter().collect(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.detail, self.elements)
    }
}

/// Outcome of one exhaustive property check.
pub type Check = Result<(), Counterexample>;

/// Fail the enclosing [`Check`] with a counterexample unless `cond` holds.
#[macro_export]
macro_rules! ensure {
    ($cond:expr, [$($e:expr),* $(,)?], $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::witness::Counterexample::new(
                format!($($fmt)+),
                [$($e as $crate::elemset::Elem),*],
            ));
        }
    };
    ($cond:expr, $elems:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::witness::Counterexample::new(format!($($fmt)+), $elems));
        }
    };
}
