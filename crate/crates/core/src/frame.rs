//! Moving frames on the lattice: 4x4 frame matrices whose rows are the
//! frame vectors, and path-checked integration of site-dependent transition
//! matrices.
//!
//! A frame grid is filled from a seed at the origin by applying the
//! `n1`-transition along row `n2 = 0` and the `n2`-transition up each
//! column. Path independence is not assumed: every face carries a relative
//! residual comparing the two ways around it, which is the working
//! diagnostic for compatibility of the underlying difference equations.

use nalgebra::Matrix4;

use crate::grid::Grid;
use crate::projective::HPoint;

/// 4x4 frame matrix; row `i` holds the homogeneous coordinates of the
/// `i`-th frame vector (vertex, two edge vectors, transversal).
pub type FrameMatrix = Matrix4<f64>;

/// Row `i` of a frame as a homogeneous point.
pub fn frame_row(frame: &FrameMatrix, i: usize) -> HPoint {
    frame.row(i).transpose()
}

/// Placeholder for transition matrices outside their stencil domain.
pub fn nan_matrix() -> FrameMatrix {
    FrameMatrix::from_element(f64::NAN)
}

fn is_finite_matrix(m: &FrameMatrix) -> bool {
    m.iter().all(|v| v.is_finite())
}

/// Frame grid together with per-face path-independence residuals.
#[derive(Clone, Debug)]
pub struct FrameLattice {
    pub frames: Grid<FrameMatrix>,
    /// Relative residual `|L_2 M F - M_1 L F| / max(|.|,|.|)` per face,
    /// NaN where a face does not fit or a transition is undefined.
    pub face_residuals: Grid<f64>,
}

impl FrameLattice {
    /// Largest face residual (0 for grids without complete faces).
    pub fn max_face_residual(&self) -> f64 {
        self.face_residuals.max_abs()
    }
}

/// Integrates frames from `seed` at the origin: `F(n1+1,n2) = L(n1,n2) F`
/// along row 0 and `F(n1,n2+1) = M(n1,n2) F` up every column, then
/// evaluates the residual of the two paths around every face.
///
/// Transition entries may be NaN outside their stencil domain; frames and
/// residuals depending on them stay NaN.
pub fn integrate_transitions(
    l: &Grid<FrameMatrix>,
    m: &Grid<FrameMatrix>,
    seed: FrameMatrix,
) -> FrameLattice {
    assert_eq!(l.n1_len(), m.n1_len());
    assert_eq!(l.n2_len(), m.n2_len());
    let (n1_len, n2_len) = (l.n1_len(), l.n2_len());

    let mut frames = Grid::filled(n1_len, n2_len, nan_matrix());
    frames.set(0, 0, seed);
    for n1 in 0..n1_len - 1 {
        let next = l.get(n1, 0) * frames.get(n1, 0);
        frames.set(n1 + 1, 0, next);
    }
    for n2 in 0..n2_len - 1 {
        for n1 in 0..n1_len {
            let next = m.get(n1, n2) * frames.get(n1, n2);
            frames.set(n1, n2 + 1, next);
        }
    }

    let face_residuals = Grid::from_fn(n1_len, n2_len, |n1, n2| {
        if n1 + 1 >= n1_len || n2 + 1 >= n2_len {
            return f64::NAN;
        }
        let f = frames.get(n1, n2);
        let via_m_first = l.get(n1, n2 + 1) * m.get(n1, n2) * f;
        let via_l_first = m.get(n1 + 1, n2) * l.get(n1, n2) * f;
        if !is_finite_matrix(&via_m_first) || !is_finite_matrix(&via_l_first) {
            return f64::NAN;
        }
        let scale = via_m_first.norm().max(via_l_first.norm());
        if scale == 0.0 {
            0.0
        } else {
            (via_m_first - via_l_first).norm() / scale
        }
    });

    FrameLattice { frames, face_residuals }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_commuting_transitions_are_flat() {
        let l = Grid::filled(4, 3, FrameMatrix::new_scaling(2.0));
        let m = Grid::filled(4, 3, FrameMatrix::new_scaling(3.0));
        let lat = integrate_transitions(&l, &m, FrameMatrix::identity());
        assert!(lat.max_face_residual() <= 1e-15);
        let f = lat.frames.get(2, 1);
        assert!((f[(0, 0)] - 12.0).abs() <= 1e-12);
    }

    #[test]
    fn non_commuting_transitions_report_face_residual() {
        let mut a = FrameMatrix::identity();
        a[(0, 1)] = 1.0;
        let mut b = FrameMatrix::identity();
        b[(1, 0)] = 1.0;
        let l = Grid::filled(3, 3, a);
        let m = Grid::filled(3, 3, b);
        let lat = integrate_transitions(&l, &m, FrameMatrix::identity());
        assert!(lat.max_face_residual() > 1e-2);
    }

    #[test]
    fn nan_transitions_keep_residuals_nan_not_poisoned() {
        let mut l = Grid::filled(3, 3, FrameMatrix::identity());
        let m = Grid::filled(3, 3, FrameMatrix::identity());
        l.set(1, 2, nan_matrix());
        let lat = integrate_transitions(&l, &m, FrameMatrix::identity());
        assert!(lat.face_residuals.get(1, 1).is_nan());
        assert_eq!(lat.max_face_residual(), 0.0);
    }
}
