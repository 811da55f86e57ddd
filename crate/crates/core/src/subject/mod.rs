//! The Creating Subject: staged oracles and the choice sequences built on them.

pub mod choice;
pub mod oracle;
pub mod species;

pub use choice::{brouwer_alpha, kripke_witness, vesley_x, BinarySeq};
pub use oracle::{GoldbachOracle, OracleSpecError, ProblemOracle, Status, SyntheticOracle, Verdict};
pub use species::{
    archimedean_probe, m_alpha_contains, subring_probe, Exclusion, Membership, MembershipVerdict,
    SubringEntry, SubringReport,
};
