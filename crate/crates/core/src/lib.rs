//! Exact F_p kernel for graded rings: pieces of ideals, colon ideals,
//! limit and tight closures, and graded local cohomology.

pub mod closure;
pub mod gfp;
pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod ring;
pub mod sequence;
pub mod verdict;

pub use closure::{Bounds, TestElement};
pub use gfp::{rref, Matrix, PrimeField, SparseEchelon, Subspace};
pub use ideal::{IdealHandle, SopData};
pub use poly::{Monomial, PolyRing, Polynomial};
pub use ring::{DegreeBasis, DimProvenance, GradedRing, RingPresentation};
pub use verdict::{Bound, Status, Verdict};
