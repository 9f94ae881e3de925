use serde::{Deserialize, Serialize};

use super::{Disc, Vec2};
use crate::error::{Error, Result};

/// A problem instance: a point robot of maximum speed `robot_speed` must
/// travel from `source` to `destination` among the growing `discs`.
///
/// Validated scenes satisfy:
/// * `robot_speed > 0` and at least one disc;
/// * every disc has `0 < growth_rate < robot_speed` and `radius0 >= 0`;
/// * source and destination lie strictly outside every disc at `t = 0`;
/// * source and destination differ.
///
/// The struct itself is plain data; the shrinking-world transform reuses it
/// with negative growth rates, bypassing [`Scene::validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub robot_speed: f64,
    pub discs: Vec<Disc>,
    pub source: Vec2,
    pub destination: Vec2,
}

impl Scene {
    /// Builds a scene and checks all invariants.
    pub fn new(robot_speed: f64, discs: Vec<Disc>, source: Vec2, destination: Vec2) -> Result<Self> {
        let scene = Self { robot_speed, discs, source, destination };
        scene.validate()?;
        Ok(scene)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String, disc: Option<usize>| Err(Error::InvalidScene { reason, disc });
        if !(self.robot_speed > 0.0) || !self.robot_speed.is_finite() {
            return fail(format!("robot_speed must be positive, got {}", self.robot_speed), None);
        }
        if self.discs.is_empty() {
            return fail("scene requires at least one disc".into(), None);
        }
        if self.source == self.destination {
            return fail("source and destination coincide".into(), None);
        }
        for (i, d) in self.discs.iter().enumerate() {
            if !(d.radius0 >= 0.0) {
                return fail(format!("radius0 must be nonnegative, got {}", d.radius0), Some(i));
            }
            if !(d.growth_rate > 0.0 && d.growth_rate < self.robot_speed) {
                return fail(
                    format!(
                        "growth_rate must lie in (0, robot_speed={}), got {}",
                        self.robot_speed, d.growth_rate
                    ),
                    Some(i),
                );
            }
            if self.source.distance(d.center) <= d.radius0 {
                return fail("source is not strictly outside the disc at t = 0".into(), Some(i));
            }
            if self.destination.distance(d.center) <= d.radius0 {
                return fail("destination is not strictly outside the disc at t = 0".into(), Some(i));
            }
        }
        Ok(())
    }

    /// Earliest time the destination is contained in some disc. Finite for
    /// every validated scene since all growth rates are positive.
    pub fn t_max(&self) -> f64 {
        self.discs
            .iter()
            .filter_map(|d| d.coverage_time(self.destination))
            .fold(f64::INFINITY, f64::min)
    }

    /// Minimum growth rate among the discs.
    pub fn min_growth_rate(&self) -> f64 {
        self.discs.iter().map(|d| d.growth_rate).fold(f64::INFINITY, f64::min)
    }

    /// Euclidean distance between source and destination.
    pub fn sd_distance(&self) -> f64 {
        self.source.distance(self.destination)
    }

    /// Pairs of discs whose interiors already overlap at `t = 0`. Such
    /// scenes are accepted; the collision predicates handle them.
    pub fn initial_overlaps(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.discs.len() {
            for j in (i + 1)..self.discs.len() {
                let a = &self.discs[i];
                let b = &self.discs[j];
                if a.center.distance(b.center) < a.radius0 + b.radius0 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc(x: f64, y: f64, r: f64, v: f64) -> Disc {
        Disc::new(Vec2::new(x, y), r, v)
    }

    #[test]
    fn t_max_single_disc() {
        let s = Scene::new(1.0, vec![disc(0.0, 0.0, 1.0, 1.0)], Vec2::new(-3.0, 0.0), Vec2::new(5.0, 0.0))
            .unwrap();
        assert_eq!(s.t_max(), 4.0);
    }

    #[test]
    fn t_max_takes_min() {
        let s = Scene::new(
            1.0,
            vec![disc(0.0, 0.0, 1.0, 1.0), disc(0.0, 12.0, 0.0, 1.0)],
            Vec2::new(-3.0, 0.0),
            Vec2::new(5.0, 0.0),
        )
        .unwrap();
        // coverage times 4 and 13
        assert_eq!(s.t_max(), 4.0);
    }

    #[test]
    fn t_max_slow_far_disc() {
        let s = Scene::new(
            1.0,
            vec![disc(0.0, 0.0, 0.5, 0.25)],
            Vec2::new(-1.0, 0.0),
            Vec2::new(100.0, 0.0),
        )
        .unwrap();
        assert_eq!(s.t_max(), 398.0);
    }

    #[test]
    fn rejects_rate_at_or_above_robot_speed() {
        let err = Scene::new(1.0, vec![disc(0.0, 0.0, 1.0, 1.0)], Vec2::new(-3.0, 0.0), Vec2::new(0.0, 5.0));
        assert!(err.is_ok());
        let err = Scene::new(1.0, vec![disc(0.0, 0.0, 1.0, 1.5)], Vec2::new(-3.0, 0.0), Vec2::new(0.0, 5.0));
        match err {
            Err(Error::InvalidScene { disc: Some(0), .. }) => {}
            other => panic!("expected invalid disc 0, got {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_disc_set() {
        assert!(Scene::new(1.0, vec![], Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn rejects_covered_endpoints() {
        let err = Scene::new(1.0, vec![disc(0.0, 0.0, 2.0, 0.5)], Vec2::new(1.0, 0.0), Vec2::new(5.0, 0.0));
        assert!(err.is_err());
    }

    #[test]
    fn reports_initial_overlaps() {
        let s = Scene::new(
            1.0,
            vec![disc(0.0, 0.0, 1.0, 0.5), disc(1.5, 0.0, 1.0, 0.5), disc(10.0, 0.0, 1.0, 0.5)],
            Vec2::new(-5.0, 0.0),
            Vec2::new(5.0, 5.0),
        )
        .unwrap();
        assert_eq!(s.initial_overlaps(), vec![(0, 1)]);
    }
}
