use std::f64::consts::PI;

use serde::Serialize;

use crate::sphere::SpherePoint;

/// An angular partition of the equator or of the whole sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverageGrid {
    /// Equal longitude arcs of the circle `z = 0`, binned by `atan2(y, x)`.
    Equator { cells: usize },
    /// Equal-area cells: `bands` slabs of equal height in z times `sectors`
    /// longitude sectors.
    Sphere { bands: usize, sectors: usize },
}

impl CoverageGrid {
    pub fn cell_count(&self) -> usize {
        match *self {
            CoverageGrid::Equator { cells } => cells,
            CoverageGrid::Sphere { bands, sectors } => bands * sectors,
        }
    }

    /// Cell index of a unit vector; `None` for points without a longitude
    /// (the poles) on the equator grid, or for points off the equator.
    pub fn cell_of(&self, v: [f64; 3]) -> Option<usize> {
        let sector = |n: usize| {
            if v[0] == 0.0 && v[1] == 0.0 {
                return 0;
            }
            let t = (v[1].atan2(v[0]) + PI) / (2.0 * PI);
            ((t * n as f64) as usize).min(n - 1)
        };
        match *self {
            CoverageGrid::Equator { cells } => {
                if v[2] != 0.0 || (v[0] == 0.0 && v[1] == 0.0) {
                    return None;
                }
                Some(sector(cells))
            }
            CoverageGrid::Sphere { bands, sectors } => {
                let t = (v[2].clamp(-1.0, 1.0) + 1.0) / 2.0;
                let band = ((t * bands as f64) as usize).min(bands - 1);
                Some(band * sectors + sector(sectors))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub grid: CoverageGrid,
    pub counts: Vec<u64>,
    pub empty_cells: usize,
    pub points: u64,
    /// Points that fall outside the grid's domain.
    pub skipped: u64,
}

/// Hit counts per cell. This is an empirical statistic.
pub fn coverage<'a, I>(points: I, grid: CoverageGrid) -> CoverageReport
where
    I: IntoIterator<Item = &'a SpherePoint>,
{
    let mut counts = vec![0u64; grid.cell_count()];
    let mut total = 0;
    let mut skipped = 0;
    for p in points {
        total += 1;
        match grid.cell_of(p.to_f64()) {
            Some(i) => counts[i] += 1,
            None => skipped += 1,
        }
    }
    CoverageReport {
        grid,
        empty_cells: counts.iter().filter(|&&c| c == 0).count(),
        counts,
        points: total,
        skipped,
    }
}
