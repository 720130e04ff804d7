//! Linking numbers, the Conway–Gordon check and transversals through linked cycles.

mod conway;
mod cycle;
mod linking;
mod subdivision;
mod transversal;

pub use cycle::PolygonalCycle;
pub use linking::{direction, linking_number, linking_number_along};
pub use conway::{conway_gordon_check, find_linked_pair, linked_pair_in, triangle_pairs, ConwayGordon, LinkedPair};
pub use subdivision::{trace_subdivision, BranchPath, Subdivision};
pub use transversal::{transversal_through_cycles, CycleTransversal};
