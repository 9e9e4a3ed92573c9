//! Projective-geometric primitives: homogeneous points in P^3, Plücker line
//! coordinates in P^5, small determinants, and the star-planarity residuals
//! of discrete asymptotic nets.
//!
//! All residuals are relative: determinants and minors are divided by the
//! natural scale of their operands, so tolerances are independent of the
//! (arbitrary) scale of homogeneous coordinates.

use nalgebra::{Matrix4, Vector4, Vector6};
use thiserror::Error;

use crate::grid::Grid;

/// Homogeneous coordinates of a point in P^3.
pub type HPoint = Vector4<f64>;

/// Errors raised by the projective primitives.
#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    /// The two points are projectively equal, so they span no line.
    #[error("points are projectively equal; they do not span a line")]
    DegenerateLine,
    /// The grid is too small for the requested stencil.
    #[error("grid {0}x{1} is too small; need at least {2}x{3}")]
    GridTooSmall(usize, usize, usize, usize),
}

/// Plücker coordinates of a line in P^3, ordered
/// `(p01, p23, p02, p13, p03, p12)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlueckerLine {
    pub p: Vector6<f64>,
}

/// Exterior product of two homogeneous points in the Plücker component
/// order `(p01, p23, p02, p13, p03, p12)`.
///
/// Unlike [`plucker_from_points`] this performs no degeneracy check, so it
/// is also usable for linear combinations of wedges, which are general
/// 6-vectors rather than lines.
pub fn wedge(a: &HPoint, b: &HPoint) -> Vector6<f64> {
    let m = |i: usize, k: usize| a[i] * b[k] - a[k] * b[i];
    Vector6::new(m(0, 1), m(2, 3), m(0, 2), m(1, 3), m(0, 3), m(1, 2))
}

/// Quadratic form of the Plücker quadric, `p01 p23 - p02 p13 + p03 p12`.
/// Zero exactly on decomposable 6-vectors (genuine lines).
pub fn quadric_form(p: &Vector6<f64>) -> f64 {
    p[0] * p[1] - p[2] * p[3] + p[4] * p[5]
}

/// Polar (symmetric bilinear) form of the Plücker quadric. For decomposable
/// arguments it equals the 4x4 determinant: `polar(a^b, c^d) = |a,b,c,d|`.
pub fn plucker_polar(p: &Vector6<f64>, q: &Vector6<f64>) -> f64 {
    p[0] * q[1] + p[1] * q[0] - p[2] * q[3] - p[3] * q[2] + p[4] * q[5] + p[5] * q[4]
}

/// Relative projective distance between two homogeneous points:
/// `|x ^ y| / (|x| |y|)`, the sine of the angle between the spanned rays.
/// Zero iff the points are projectively equal.
pub fn projective_distance(x: &HPoint, y: &HPoint) -> f64 {
    let nx = x.norm();
    let ny = y.norm();
    if nx == 0.0 || ny == 0.0 {
        return f64::NAN;
    }
    wedge(x, y).norm() / (nx * ny)
}

/// Tests projective equality up to `tol`: all 2x2 minors of `[x|y]` below
/// `tol * |x| |y|`.
pub fn projectively_equal(x: &HPoint, y: &HPoint, tol: f64) -> bool {
    projective_distance(x, y) <= tol
}

/// Line through two projectively distinct points.
pub fn plucker_from_points(a: &HPoint, b: &HPoint) -> Result<PlueckerLine, GeometryError> {
    let p = wedge(a, b);
    if p.norm() <= 1e-12 * a.norm() * b.norm() {
        return Err(GeometryError::DegenerateLine);
    }
    Ok(PlueckerLine { p })
}

impl PlueckerLine {
    /// Residual of the Plücker identity, relative to `|p|^2`.
    pub fn identity_residual(&self) -> f64 {
        quadric_form(&self.p).abs() / self.p.norm_squared()
    }
}

/// Determinant of a 4x4 matrix.
pub fn det4(m: &Matrix4<f64>) -> f64 {
    m.determinant()
}

/// Determinant of the matrix with the four points as columns. For
/// homogeneous points this is the (signed) volume test for coplanarity.
pub fn det4_points(a: &HPoint, b: &HPoint, c: &HPoint, d: &HPoint) -> f64 {
    Matrix4::from_columns(&[*a, *b, *c, *d]).determinant()
}

/// Coplanarity residual of four points, normalized by the product of their
/// norms so it is invariant under rescaling any of them.
pub fn coplanarity_residual(a: &HPoint, b: &HPoint, c: &HPoint, d: &HPoint) -> f64 {
    let scale = a.norm() * b.norm() * c.norm() * d.norm();
    if scale == 0.0 {
        return f64::NAN;
    }
    det4_points(a, b, c, d).abs() / scale
}

/// The two star-planarity residual families of a discrete asymptotic net.
///
/// `d1` holds `|r, r_1, r_11, r_12|` based at each site where the stencil
/// fits, `d2` the mirror `|r, r_2, r_22, r_12|`; both are normalized and
/// NaN-padded outside their stencil domain.
#[derive(Clone, Debug)]
pub struct AsymptoticResiduals {
    pub d1: Grid<f64>,
    pub d2: Grid<f64>,
}

/// Evaluates both planarity determinants over the grid. Zero everywhere
/// exactly when the surface is a discrete asymptotic net.
pub fn asymptotic_residuals(surface: &Grid<HPoint>) -> Result<AsymptoticResiduals, GeometryError> {
    let (n1, n2) = (surface.n1_len(), surface.n2_len());
    if n1 < 3 || n2 < 2 {
        return Err(GeometryError::GridTooSmall(n1, n2, 3, 2));
    }
    if n2 < 3 {
        return Err(GeometryError::GridTooSmall(n1, n2, 2, 3));
    }
    let d1 = Grid::from_fn(n1, n2, |i, j| {
        if i + 2 < n1 && j + 1 < n2 {
            coplanarity_residual(
                surface.get(i, j),
                surface.get(i + 1, j),
                surface.get(i + 2, j),
                surface.get(i + 1, j + 1),
            )
        } else {
            f64::NAN
        }
    });
    let d2 = Grid::from_fn(n1, n2, |i, j| {
        if i + 1 < n1 && j + 2 < n2 {
            coplanarity_residual(
                surface.get(i, j),
                surface.get(i, j + 1),
                surface.get(i, j + 2),
                surface.get(i + 1, j + 1),
            )
        } else {
            f64::NAN
        }
    });
    Ok(AsymptoticResiduals { d1, d2 })
}
