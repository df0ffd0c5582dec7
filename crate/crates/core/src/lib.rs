//! Exact verification engine for the deformed oscillator algebra, its
//! covariance quantum group, the R and R' matrices that control it, the
//! induced braided Hopf structure, and representations of two quantum
//! subgroups.
//!
//! Symbolic work happens over [`field::FieldElem`], the field of rational
//! functions in the deformation parameters `q` and `Q1`.

pub mod braided;
pub mod field;
pub mod ncalg;
pub mod oscillator;
pub mod qgroup;
pub mod report;
pub mod reps;
pub mod rmatrix;
