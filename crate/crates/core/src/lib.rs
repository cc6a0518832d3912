//! Weight decompositions, slices and kernels of diagonal semisimple
//! derivations on Laurent polynomial rings over ℚ.

pub mod cli;
pub mod derivation;
pub mod error;
pub mod kernel;
pub mod laurent;
pub mod numtheory;
pub mod slice;

pub use error::{Error, Result};
pub use laurent::{parse, ExpVec, LaurentPoly, RingCtx};
pub use numtheory::{bezout_multi, BezoutResult, Rat};
pub use derivation::{
    local_finiteness_probe, Derivation, DiagonalDerivation, FinitenessVerdict, GeneralDerivation,
    WeightDecomposition,
};
pub use kernel::{HilbertBasis, KernelGenerators, SliceCoordinates};
pub use slice::{build_slice, faithfulness_index, verify_slice, SliceData};
