//! Exact kinematic geometry of growing discs.
//!
//! Conventions used throughout the crate:
//!
//! * angles are in radians, counterclockwise positive, measured from the
//!   +x axis; comparisons wrap to `(-pi, pi]`;
//! * a *right* tangent is one where the disc lies to the right of the
//!   directed tangent segment; a clockwise-winding robot departs and lands
//!   on right-type tangents, a counterclockwise one on left-type;
//! * growth rates may be negative (the shrinking-world transform produces
//!   them); a disc whose radius has shrunk to zero is no obstacle.

mod collision;
mod disc;
pub(crate) mod rootfind;
mod scene;
mod spiral;
mod tangent;

pub use collision::segment_collision_free;
pub use disc::Disc;
pub use scene::Scene;
pub use spiral::{spiral_collision_free, spiral_position, SpiralClearance, SpiralState, Winding};
pub use tangent::{
    solve_disc_to_disc_tangent, solve_disc_to_point_tangent, solve_point_to_disc_tangent,
    solve_point_to_point, ArrivalSide, TangentKind, TangentSolution,
};

pub(crate) use collision::swept_segment_clear;
pub(crate) use tangent::{disc_to_disc_roots, disc_to_point_roots};

use serde::{Deserialize, Serialize};

/// Geometric residual tolerance used when constructing solutions.
pub const CONSTRUCTION_TOL: f64 = 1e-9;
/// Residual tolerance for accepting an externally supplied solution.
pub const ACCEPT_TOL: f64 = 1e-7;
/// Slack in collision predicates so exact tangency does not register as a
/// collision. Applied to squared-distance differences.
pub const COLLISION_SLACK: f64 = 1e-9;
/// Bisection tolerance on departure times, in time units.
pub const TIME_TOL: f64 = 1e-11;

/// A point or displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn distance(self, other: Self) -> f64 {
        (other - self).norm()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Unit vector at the given angle.
    pub fn unit(angle: f64) -> Self {
        Self::new(angle.cos(), angle.sin())
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

/// Wraps an angle to `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(std::f64::consts::TAU);
    if r > std::f64::consts::PI {
        r - std::f64::consts::TAU
    } else {
        r
    }
}
