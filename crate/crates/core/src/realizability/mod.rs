//! Graphicality of degree sequences and group-preserving repair.
//!
//! Anonymized slices are not guaranteed to be degree sequences of a simple
//! graph. The repair here lowers group degrees until the Erdős–Gallai
//! inequalities hold, then fixes the parity of the degree sum, always moving
//! whole groups together so that k-anonymity is untouched.

mod enforce;
mod erdos_gallai;
mod oracle;
mod parity;
mod profile;
mod repair;

pub use enforce::enforce_realizability;
pub use erdos_gallai::{
    erdos_gallai_holds, erdos_gallai_slack, erdos_gallai_sorted, is_graphical, is_realizable,
};
pub use oracle::{optimal_uniform_repair, ORACLE_MAX_GROUPS, ORACLE_MAX_NODES};
pub use parity::{fix_parity, fix_parity_toward};
pub use profile::GroupDegreeProfile;
pub use repair::{
    assemble_repair, repair_column, repair_degree_matrix, ColumnRepair, Repair, RepairStats,
};
