use crate::error::{Error, Result};
use crate::quotient::ParamPoint;
use crate::torus::TorusGeometry;
use crate::{mobius, torus};

/// Successive gap ratio expected from quadratic decay over one decade.
pub const QUADRATIC_RATIO: f64 = 1e-2;

/// A ratio certifies quadratic decay when it is within a factor 2 of
/// [`QUADRATIC_RATIO`].
pub const RATIO_BAND: (f64, f64) = (QUADRATIC_RATIO / 2.0, QUADRATIC_RATIO * 2.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeamRow {
    /// The parameter that tends to the seam, `10⁻ᵏ`.
    pub param: f64,
    /// `y` coordinate of the probe point.
    pub y: f64,
    pub gap: f64,
    /// `gap / previous gap`; absent on the first row.
    pub ratio: Option<f64>,
}

impl SeamRow {
    /// `|log₂(ratio / QUADRATIC_RATIO)|`: at most 1 inside [`RATIO_BAND`].
    pub fn band_error(&self) -> Option<f64> {
        self.ratio.map(|r| (r / QUADRATIC_RATIO).log2().abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeamSurface {
    /// Probes `m(t, 10⁻ᵏ)` approaching `v = 0` at fixed `t`.
    Mobius { t: f64 },
    /// Probes `t(10⁻ᵏ, v)` approaching `u = 0` at fixed `v`.
    Torus { geom: TorusGeometry, v: f64 },
}

fn check_decades(decades: &[i32]) -> Result<()> {
    if decades.is_empty() {
        return Err(Error::InvalidArgument("no decades given".into()));
    }
    if let Some(&k) = decades.iter().find(|&&k| k < 2) {
        return Err(Error::InvalidArgument(format!(
            "decade exponents must be at least 2, got {k}"
        )));
    }
    if decades.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "decade exponents must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Seam gaps at parameters `10⁻ᵏ` for each `k` in `decades`.
pub fn seam_rows(surface: SeamSurface, decades: &[i32]) -> Result<Vec<SeamRow>> {
    check_decades(decades)?;
    let mut rows: Vec<SeamRow> = Vec::with_capacity(decades.len());
    for &k in decades {
        let param = 10f64.powi(-k);
        let (y, gap) = match surface {
            SeamSurface::Mobius { t } => {
                let q = mobius::embed(&ParamPoint::mobius(t, param)?);
                (q.y, mobius::seam_gap(q.x, q.y, q.z)?)
            }
            SeamSurface::Torus { geom, v } => {
                let q = torus::embed(&ParamPoint::torus(param, v)?, &geom);
                (q.y, torus::seam_gap(&q)?)
            }
        };
        let ratio = rows.last().map(|prev| gap / prev.gap);
        rows.push(SeamRow {
            param,
            y,
            gap,
            ratio,
        });
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[SeamRow]) -> String {
    use crate::fmt::real;
    let mut out = String::from("param,y,gap,ratio\n");
    for r in rows {
        let ratio = r.ratio.map(real).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{}\n",
            real(r.param),
            real(r.y),
            real(r.gap),
            ratio
        ));
    }
    out
}

/// Whether every ratio lies in [`RATIO_BAND`].
pub fn ratios_in_band(rows: &[SeamRow]) -> bool {
    rows.iter()
        .filter_map(|r| r.ratio)
        .all(|r| (RATIO_BAND.0..=RATIO_BAND.1).contains(&r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decade_validation() {
        let s = SeamSurface::Mobius { t: 0.5 };
        assert!(seam_rows(s, &[]).is_err());
        assert!(seam_rows(s, &[1, 2]).is_err());
        assert!(seam_rows(s, &[3, 2]).is_err());
        assert!(seam_rows(s, &[2, 2]).is_err());
        assert_eq!(seam_rows(s, &[2, 3, 4]).unwrap().len(), 3);
    }

    #[test]
    fn ratios_certify_quadratic_decay() {
        let rows = seam_rows(SeamSurface::Mobius { t: 0.5 }, &[2, 3, 4]).unwrap();
        assert!(rows[0].ratio.is_none());
        assert!(ratios_in_band(&rows), "{rows:?}");
        let rows = seam_rows(
            SeamSurface::Torus {
                geom: TorusGeometry::default(),
                v: 0.0,
            },
            &[2, 3, 4],
        )
        .unwrap();
        assert!(ratios_in_band(&rows), "{rows:?}");
    }

    #[test]
    fn csv_has_one_row_per_decade() {
        let rows = seam_rows(SeamSurface::Mobius { t: 0.5 }, &[2, 3, 4]).unwrap();
        let csv = rows_to_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "param,y,gap,ratio");
        assert!(lines[1].ends_with(','));
        assert!(lines[1].starts_with("0.01,"));
    }
}
