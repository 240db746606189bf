use std::fmt;

/// A point of R³.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dist_inf(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    pub fn dist(&self, other: &Self) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::fmt::real;
        write!(f, "({}, {}, {})", real(self.x), real(self.y), real(self.z))
    }
}

/// A point of R⁴, with coordinates named after the projective embedding.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point4 {
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub t: f64,
}

impl Point4 {
    pub const ORIGIN: Point4 = Point4::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(u: f64, v: f64, w: f64, t: f64) -> Self {
        Self { u, v, w, t }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.u, self.v, self.w, self.t]
    }

    pub fn dist_inf(&self, other: &Self) -> f64 {
        (self.u - other.u)
            .abs()
            .max((self.v - other.v).abs())
            .max((self.w - other.w).abs())
            .max((self.t - other.t).abs())
    }

    pub fn dist(&self, other: &Self) -> f64 {
        let d = [
            self.u - other.u,
            self.v - other.v,
            self.w - other.w,
            self.t - other.t,
        ];
        d.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }
}

impl fmt::Display for Point4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::fmt::real;
        write!(
            f,
            "({}, {}, {}, {})",
            real(self.u),
            real(self.v),
            real(self.w),
            real(self.t)
        )
    }
}
