//! Heegaard Floer invariants of the lifts of 2-bridge knots to their
//! branched double covers, computed from twisted toroidal grid diagrams,
//! together with the finite-concordance-order obstructions built from them.
//!
//! The pipeline is
//!
//! 1. [`grid::GridDiagram`]: the doubly pointed genus one diagram of the lift,
//! 2. [`gradings`]: Maslov and Alexander gradings via the cyclic cover,
//! 3. [`homology`]: filtered cancellation down to the survivors per label,
//! 4. [`obstruct`]: subgroup sums and the min/max test.
//!
//! [`compute`] runs steps 1 to 3 for one knot.

pub mod error;
pub mod gradings;
pub mod grid;
pub mod homology;
pub mod knot;
pub mod lens_d;
pub mod obstruct;
pub mod pipeline;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use knot::TwoBridgeKnot;
pub use pipeline::{compute, tau_and_d, Engine, KnotFloer};
pub use rational::Q;
