mod completion;
mod exact_cover;
mod partition;
mod pent2;

pub use completion::{complete_from_deficiency, Completion};
pub use exact_cover::{solve_first, SearchBudget, SearchOutcome};
pub use partition::{partition_p, pent2_count, PARTITION_MAX_N};
pub use pent2::{cycle_types, pent2_enumerate, CycleType};
