use std::fmt;

use locpart::SolveError;

pub const NO: u8 = 1;
pub const USAGE: u8 = 2;
pub const BUDGET: u8 = 3;
pub const INCOMPATIBLE: u8 = 4;
pub const THRESHOLD_EXCEEDS_K: u8 = 5;
pub const BAD_INPUT: u8 = 6;
pub const INVALID_DECOMPOSITION: u8 = 7;

/// How a successful command ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Done,
    Yes,
    No,
    Unsupported,
    InvalidDecomposition,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Done | Outcome::Yes => 0,
            Outcome::No => NO,
            Outcome::Unsupported => INCOMPATIBLE,
            Outcome::InvalidDecomposition => INVALID_DECOMPOSITION,
        }
    }
}

/// An input file that could not be read or parsed.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// A method that cannot run on the requested spec or arguments.
#[derive(Debug)]
pub struct Incompatible(pub String);

impl fmt::Display for Incompatible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Incompatible {}

pub fn code_for(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<InputError>().is_some() {
        return BAD_INPUT;
    }
    if err.downcast_ref::<Incompatible>().is_some() {
        return INCOMPATIBLE;
    }
    match err.downcast_ref::<SolveError>() {
        Some(SolveError::BudgetExceeded { .. }) => BUDGET,
        Some(SolveError::NotDegrading(_)) => INCOMPATIBLE,
        Some(SolveError::ThresholdExceedsK { .. }) => THRESHOLD_EXCEEDS_K,
        Some(SolveError::InvalidDecomposition(_)) => INVALID_DECOMPOSITION,
        _ => USAGE,
    }
}
