pub mod boolean;
pub mod complement;
pub mod emptiness;
pub mod reduce;
mod safra;
pub mod tracks;

pub use boolean::{intersect, intersect_all, union};
pub use complement::{complement, complete, equivalent, included, normalize};
pub use emptiness::{accepts, all_states_accepting, find_witness, is_empty, trim};
pub use reduce::{reduce, ReduceOptions};
pub use tracks::{cylinder, permute, project, rearrange};
