//! Weak orders and graded products on three families of combinatorial objects.
//!
//! * [`Permutation`]: the symmetric groups `S_n` with the (left) weak Bruhat order.
//! * [`Tree`]: planar binary trees `Y_n` with the rotation order.
//! * [`SignVector`]: vertices `Q_n = {-1,+1}^(n-1)` of the cube with the componentwise order.
//!
//! Each family carries a graded associative product on its free module
//! ([`FreeElement`]), and the product of two basis elements is the sum of the
//! weak-order interval between their `over` and `under` composites. The maps
//! [`psi`] and [`phi`] connect the three families and respect both the orders
//! and the products.
//!
//! The [`coxeter`] module carries the parabolic factorization and the
//! descent-free sets `X_J` for arbitrary finite Coxeter systems, and
//! [`verify`] packages the exhaustive checks used by the command-line tool.

pub mod algebra;
pub mod coxeter;
pub mod cube;
mod error;
pub mod hasse;
pub mod perm;
pub mod tree;
pub mod verify;

pub use algebra::{Dendriform, FreeElement, Graded, Product};
pub use cube::{phi, Sign, SignVector};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use tree::{psi, Tree};
