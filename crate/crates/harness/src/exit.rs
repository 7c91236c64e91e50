//! Process exit codes and how errors map onto them.

use twining_core::Error;

pub const OK: i32 = 0;
/// A verification came out unequal, or a check that should hold did not.
pub const FALSIFIED: i32 = 1;
pub const INVALID_INPUT: i32 = 2;
/// Valid input outside what is implemented: linking condition, non-finite
/// type, or over the word cap.
pub const UNSUPPORTED: i32 = 3;

pub fn code_for(err: &Error) -> i32 {
    match err {
        Error::NotFiniteType
        | Error::SingularCartanMatrix
        | Error::LinkingConditionFailed { .. }
        | Error::UnsupportedOrbitShape(_)
        | Error::TooLarge { .. } => UNSUPPORTED,
        Error::NotTauStable(_) | Error::NoDescentFound(_) | Error::Internal(_) => FALSIFIED,
        Error::NotGcm { .. }
        | Error::NotSymmetrizable { .. }
        | Error::SizeMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::NotDominant(_)
        | Error::NotDiagramAutomorphism { .. }
        | Error::NotPermutation(_)
        | Error::NotSymmetricWeight(_)
        | Error::NotInWTilde(_)
        | Error::NotReduced(_)
        | Error::ContentNotSymmetric(_)
        | Error::UnknownLabel(_)
        | Error::Parse(_) => INVALID_INPUT,
    }
}
