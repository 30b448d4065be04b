use orthochroma::generators::{coverage, enum_points, CoverageGrid, EnumMode};
use orthochroma::sphere::SpherePoint;

#[test]
fn stereographic_points_fill_a_sphere_grid() {
    let pts: Vec<SpherePoint> = enum_points(EnumMode::Stereo, 40).collect();
    let r = coverage(&pts, CoverageGrid::Sphere { bands: 20, sectors: 20 });
    assert_eq!(r.points as usize, pts.len());
    assert_eq!(r.counts.iter().sum::<u64>(), r.points - r.skipped);
    assert_eq!(r.empty_cells, 0, "{:?}", r.counts);
}

#[test]
fn quadruples_fill_a_sphere_grid() {
    let pts: Vec<SpherePoint> = enum_points(EnumMode::Quadruple, 101).collect();
    let r = coverage(&pts, CoverageGrid::Sphere { bands: 20, sectors: 20 });
    assert_eq!(r.empty_cells, 0);
}
