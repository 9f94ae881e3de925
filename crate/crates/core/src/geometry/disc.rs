use serde::{Deserialize, Serialize};

use super::Vec2;

/// A disc obstacle whose radius changes linearly in time:
/// `radius_at(t) = radius0 + growth_rate * t`.
///
/// Input scenes require a strictly positive growth rate; the shrinking-world
/// transform produces negative rates. A radius that has reached zero means
/// the disc has vanished and is no obstacle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    pub center: Vec2,
    pub radius0: f64,
    pub growth_rate: f64,
}

impl Disc {
    pub fn new(center: Vec2, radius0: f64, growth_rate: f64) -> Self {
        Self { center, radius0, growth_rate }
    }

    /// Radius at time `t`, possibly negative for shrinking discs queried
    /// past their vanish time. Callers clamp where required.
    pub fn radius_at(&self, t: f64) -> f64 {
        self.radius0 + self.growth_rate * t
    }

    /// Radius clamped at zero: the effective obstacle size.
    pub fn radius_clamped(&self, t: f64) -> f64 {
        self.radius_at(t).max(0.0)
    }

    /// First instant the boundary reaches `p`, or `None` ("never") when a
    /// non-growing disc cannot reach a point outside it.
    pub fn coverage_time(&self, p: Vec2) -> Option<f64> {
        let dist = p.distance(self.center);
        if self.growth_rate > 0.0 {
            Some((dist - self.radius0) / self.growth_rate)
        } else if dist > self.radius0 {
            None
        } else {
            // Already covered at t = 0 and never released by a non-growing
            // disc before its vanish time; report immediate coverage.
            Some(0.0)
        }
    }

    /// Time at which a shrinking disc's radius reaches zero.
    pub fn vanish_time(&self) -> Option<f64> {
        if self.growth_rate < 0.0 {
            Some(-self.radius0 / self.growth_rate)
        } else {
            None
        }
    }

    /// `p` lies strictly outside the disc at time `t`, with tolerance slack
    /// so boundary contact does not count as inside.
    pub fn point_outside(&self, p: Vec2, t: f64, tol: f64) -> bool {
        let r = self.radius_clamped(t);
        p.distance(self.center) >= r - tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_linear_evaluation() {
        let d = Disc::new(Vec2::new(0.0, 0.0), 2.0, 0.5);
        assert_eq!(d.radius_at(4.0), 4.0);
    }

    #[test]
    fn radius_at_zero_is_initial() {
        let d = Disc::new(Vec2::new(1.0, -1.0), 3.0, 1.0);
        assert_eq!(d.radius_at(0.0), 3.0);
    }

    #[test]
    fn radius_signed_rate() {
        let d = Disc::new(Vec2::new(0.0, 0.0), 5.0, -1.0);
        assert_eq!(d.radius_at(2.0), 3.0);
    }

    #[test]
    fn coverage_reaches_point() {
        let d = Disc::new(Vec2::new(0.0, 0.0), 1.0, 1.0);
        assert_eq!(d.coverage_time(Vec2::new(5.0, 0.0)), Some(4.0));

        let d = Disc::new(Vec2::new(0.0, 0.0), 2.0, 0.5);
        assert_eq!(d.coverage_time(Vec2::new(0.0, 4.0)), Some(4.0));
    }

    #[test]
    fn coverage_never_for_shrinking() {
        let d = Disc::new(Vec2::new(0.0, 0.0), 1.0, -0.5);
        assert_eq!(d.coverage_time(Vec2::new(5.0, 0.0)), None);
    }

    #[test]
    fn vanish_time_only_for_shrinking() {
        assert_eq!(Disc::new(Vec2::new(0.0, 0.0), 2.0, -0.5).vanish_time(), Some(4.0));
        assert_eq!(Disc::new(Vec2::new(0.0, 0.0), 2.0, 0.5).vanish_time(), None);
    }
}
