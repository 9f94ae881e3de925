//! Path planning among linearly growing disc obstacles.
//!
//! A point robot with maximum speed `V_r` travels from a source `s` to a
//! destination `d` in the plane while a set of discs grows linearly in time.
//! Time-minimal paths alternate between straight segments tangent to disc
//! boundaries and logarithmic spiral arcs along the boundaries themselves.
//!
//! The crate provides:
//!
//! * exact kinematic geometry of growing discs ([`geometry`]): tangent
//!   solving between moving circles, spiral motion, collision predicates;
//! * an earliest-arrival planner for a fixed departure time ([`planner`]);
//! * the shrinking-world transform and inverse arrival queries ([`reverse`]);
//! * a `(1+eps)`-approximation of the minimum arrival time function over all
//!   departure times, queryable in logarithmic time ([`approx`]);
//! * an independent space-time grid oracle used for validation ([`oracle`]);
//! * scene generators ([`scenegen`]), JSON scene I/O ([`scene_io`]) and SVG
//!   rendering ([`svg`]).

pub mod approx;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod planner;
pub mod reverse;
pub mod scene_io;
pub mod scenegen;
pub mod svg;

pub use error::Error;
pub use geometry::{Disc, Scene, SpiralState, TangentKind, TangentSolution, Vec2, Winding};
pub use planner::{arrival_time, spgd, validate_path, PathSegment, RobotPath};
pub use reverse::{reverse_path, rspgd, shrink_transform, ShrinkScene};
