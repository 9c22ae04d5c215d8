//! Exact arithmetic for compact G-manifolds with finitely many
//! non-principal orbits.
//!
//! The crate mechanizes the decidable side of that classification:
//! admissible orbit-space boundary components per cohomogeneity, unoriented
//! cobordism tests via Stiefel-Whitney numbers, Chern classes of circle
//! embeddings into U(n)/SU(n), Aloff-Wallach homotopy invariants, Loeschian
//! representability, and the Mayer-Vietoris group computations that certify
//! distinctness inside the 11- and 13-dimensional example families.
//!
//! Everything is integer-exact. The crate is `no_std` (with `alloc`);
//! IO, the CLI and serialization live in the companion `orbitkit-cli`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod aw;
pub mod chern;
pub mod cobordism;
pub mod families;
pub mod fgab;
pub mod numtheory;
pub mod orbitspace;
