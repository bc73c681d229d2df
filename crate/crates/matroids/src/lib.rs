//! Matroid algebra on small bitset ground sets.
//!
//! Matroids are represented by their bases over ground sets of up to 32
//! elements, with the rank calculus, minors, duality and direct sums derived
//! from that representation. On top of the core sit the noncommutative free
//! product with its factor-recovery machinery, canonical-form isomorphism
//! testing, bijective weak maps, and exhaustive enumeration of all
//! isomorphism classes on up to 7 elements — enough to certify the
//! injectivity count behind the Welsh lower bound `f_{n+m} >= f_n * f_m`.

pub mod bijection;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod free_product;
pub mod iso;
pub mod mask;
pub mod matroid;
pub mod verify;
pub mod weak;

pub use bijection::Bijection;
pub use catalog::Catalog;
pub use error::{Error, Result};
pub use free_product::{free_product, FactorSplit};
pub use iso::{canonical_key, is_isomorphic, IsoKey};
pub use mask::{SubsetMask, MAX_GROUND_SET};
pub use matroid::Matroid;
