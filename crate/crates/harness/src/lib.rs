//! Instance files, the verification pipeline, the battery runner and the
//! pieces of the `twining` command line.

pub mod battery;
pub mod exit;
pub mod instance;
pub mod verify;

pub use battery::{
    battery_instances, fixed_battery, run_battery, BatteryConfig, BatteryResult, Family, Mutation,
    Outcome, Status, Summary, BATTERY_WORD_CAP, FAMILIES,
};
pub use instance::{GcmSpec, Instance, Resolved};
pub use verify::{polynomial_json, verify, verify_resolved, Dimensions, VerificationReport};
