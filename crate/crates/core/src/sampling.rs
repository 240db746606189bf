//! Deterministic samples of the square and of the sphere.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, UnitSphere};

use crate::error::{Error, Result};
use crate::quotient::SpherePoint;

/// Points per axis of a square grid, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    n: usize,
    include_special: bool,
}

/// Coordinates where the inverse maps change branch: `0, ±1/2, ±1`.
pub const SPECIAL_VALUES: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

impl GridSpec {
    pub fn new(n: usize, include_special: bool) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least 3 points per axis, got {n}"
            )));
        }
        Ok(Self { n, include_special })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn include_special(&self) -> bool {
        self.include_special
    }

    /// Sorted axis values: `n` equally spaced values on `[-1, 1]`, merged
    /// with [`SPECIAL_VALUES`] when requested. Values are computed as
    /// `(2i - (n - 1)) / (n - 1)` so that dyadic nodes are exact.
    pub fn axis(&self) -> Vec<f64> {
        let d = (self.n - 1) as f64;
        let mut out: Vec<f64> = (0..self.n)
            .map(|i| (2.0 * i as f64 - d) / d)
            .collect();
        if self.include_special {
            out.extend(SPECIAL_VALUES);
        }
        out.sort_by(f64::total_cmp);
        out.dedup_by(|a, b| a == b);
        out.iter_mut().for_each(|c| *c += 0.0);
        out
    }

    /// All `(a, b)` pairs of the grid, `b` varying fastest.
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        let axis = self.axis();
        axis.iter()
            .flat_map(|&a| axis.iter().map(move |&b| (a, b)))
            .collect()
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n: 41,
            include_special: true,
        }
    }
}

/// Golden-angle Fibonacci lattice of `n` points spiralling about the x-axis
/// from `(1, 0, 0)` to `(-1, 0, 0)`.
///
/// The first point is exactly `(1, 0, 0)`. With `n ≥ 2` the last point is
/// exactly `(-1, 0, 0)`.
pub fn fibonacci_sphere(n: usize) -> Vec<SpherePoint> {
    let golden_angle = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let x = if n == 1 {
                1.0
            } else {
                1.0 - 2.0 * i as f64 / (n - 1) as f64
            };
            let r = (1.0 - x * x).max(0.0).sqrt();
            let phi = golden_angle * i as f64;
            let (y, z) = if r == 0.0 {
                (0.0, 0.0)
            } else {
                (r * phi.cos(), r * phi.sin())
            };
            SpherePoint::normalize(x, y, z).expect("lattice points are nonzero")
        })
        .collect()
}

/// The 26 unit vectors along the axes, face diagonals and space diagonals of
/// the cube: every sign pattern of `(a, b, c)` with entries in `{-1, 0, 1}`,
/// not all zero, normalized.
pub fn special_sphere_points() -> Vec<SpherePoint> {
    let mut out = Vec::with_capacity(26);
    for a in [-1.0, 0.0, 1.0] {
        for b in [-1.0, 0.0, 1.0] {
            for c in [-1.0, 0.0, 1.0] {
                if a == 0.0 && b == 0.0 && c == 0.0 {
                    continue;
                }
                out.push(SpherePoint::normalize(a, b, c).expect("nonzero"));
            }
        }
    }
    out
}

/// `n` uniformly distributed unit vectors from a ChaCha stream seeded with
/// `seed`.
pub fn random_sphere(n: usize, seed: u64) -> Vec<SpherePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let [x, y, z]: [f64; 3] = UnitSphere.sample(&mut rng);
            SpherePoint::normalize(x, y, z).expect("unit sphere samples are nonzero")
        })
        .collect()
}
