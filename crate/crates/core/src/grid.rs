//! Dense rectangular lattice container shared by all lattice computations.
//!
//! Sites are addressed by `(n1, n2)` with `0 <= n1 < n1_len` and
//! `0 <= n2 < n2_len`. Storage is row-major with `n1` varying fastest, and
//! iteration follows the same order, which is also the sweep order used by
//! the evolution routines.

/// Lattice direction, used to select between the two families of shifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeDir {
    /// Shifts in the first index (`n1`).
    N1,
    /// Shifts in the second index (`n2`).
    N2,
}

/// Dense `n1_len x n2_len` array of `T` over Z^2 combinatorics.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid<T> {
    n1_len: usize,
    n2_len: usize,
    sites: Vec<T>,
}

impl<T> Grid<T> {
    /// Builds a grid by evaluating `f` at every site in sweep order.
    pub fn from_fn(n1_len: usize, n2_len: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n1_len > 0 && n2_len > 0, "grid dimensions must be positive");
        let mut sites = Vec::with_capacity(n1_len * n2_len);
        for n2 in 0..n2_len {
            for n1 in 0..n1_len {
                sites.push(f(n1, n2));
            }
        }
        Grid { n1_len, n2_len, sites }
    }

    /// Number of sites in the `n1` direction.
    pub fn n1_len(&self) -> usize {
        self.n1_len
    }

    /// Number of sites in the `n2` direction.
    pub fn n2_len(&self) -> usize {
        self.n2_len
    }

    fn idx(&self, n1: usize, n2: usize) -> usize {
        assert!(
            n1 < self.n1_len && n2 < self.n2_len,
            "site ({n1},{n2}) out of bounds for {}x{} grid",
            self.n1_len,
            self.n2_len
        );
        n2 * self.n1_len + n1
    }

    /// Reference to the value at `(n1, n2)`. Panics when out of bounds.
    pub fn get(&self, n1: usize, n2: usize) -> &T {
        &self.sites[self.idx(n1, n2)]
    }

    /// Value at `(n1, n2)` if the site exists.
    pub fn try_get(&self, n1: usize, n2: usize) -> Option<&T> {
        if n1 < self.n1_len && n2 < self.n2_len {
            Some(&self.sites[n2 * self.n1_len + n1])
        } else {
            None
        }
    }

    /// Overwrites the value at `(n1, n2)`. Panics when out of bounds.
    pub fn set(&mut self, n1: usize, n2: usize, value: T) {
        let i = self.idx(n1, n2);
        self.sites[i] = value;
    }

    /// Iterates over `((n1, n2), &value)` in sweep order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let n1_len = self.n1_len;
        self.sites
            .iter()
            .enumerate()
            .map(move |(i, v)| ((i % n1_len, i / n1_len), v))
    }

    /// Applies `f` sitewise, keeping the dimensions.
    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Grid<U> {
        Grid {
            n1_len: self.n1_len,
            n2_len: self.n2_len,
            sites: self.sites.iter().map(|v| f(v)).collect(),
        }
    }

    /// Applies `f` with site coordinates, keeping the dimensions.
    pub fn map_sites<U>(&self, mut f: impl FnMut(usize, usize, &T) -> U) -> Grid<U> {
        Grid::from_fn(self.n1_len, self.n2_len, |n1, n2| f(n1, n2, self.get(n1, n2)))
    }
}

impl<T: Clone> Grid<T> {
    /// Builds a grid with every site set to `value`.
    pub fn filled(n1_len: usize, n2_len: usize, value: T) -> Self {
        Grid::from_fn(n1_len, n2_len, |_, _| value.clone())
    }
}

impl Grid<f64> {
    /// Largest absolute value over the grid, skipping NaN padding.
    /// Returns 0 when every site is NaN.
    pub fn max_abs(&self) -> f64 {
        self.sites
            .iter()
            .filter(|v| !v.is_nan())
            .fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Mean absolute value over the non-NaN sites (0 when all NaN).
    pub fn mean_abs(&self) -> f64 {
        let mut sum = 0.0;
        let mut count = 0usize;
        for v in &self.sites {
            if !v.is_nan() {
                sum += v.abs();
                count += 1;
            }
        }
        if count == 0 {
            0.0
        } else {
            sum / count as f64
        }
    }

    /// Site and value of the largest absolute entry, skipping NaN padding.
    pub fn worst_site(&self) -> Option<(usize, usize, f64)> {
        let mut worst: Option<(usize, usize, f64)> = None;
        for ((n1, n2), v) in self.iter() {
            if v.is_nan() {
                continue;
            }
            if worst.map_or(true, |(_, _, w)| v.abs() > w.abs()) {
                worst = Some((n1, n2, *v));
            }
        }
        worst
    }
}
