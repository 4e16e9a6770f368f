//! Exact symbolic engine for the quantum orthogonal group SO_q(3), its
//! quantum spheres, SO(2) line bundles and the dual U_{q^{1/2}}(sl2) action.

pub mod bundles;
pub mod coinv;
pub mod freealg;
pub mod ideal;
pub mod linalg;
pub mod par;
pub mod parse;
pub mod props;
pub mod report;
pub mod rewrite;
pub mod rmatrix;
pub mod scalar;
pub mod slq2;
pub mod soq3;
pub mod suites;
pub mod systems;
pub mod uqdual;

pub use freealg::{Alphabet, AlgebraError, Letter, NcMatrix, NcPoly, Tensor2, Word};
pub use scalar::{Regime, Scalar};
