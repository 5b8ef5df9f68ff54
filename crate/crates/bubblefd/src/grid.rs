//! Uniform space-time lattice on [0,T] x [-a,a] and fields living on it.
//!
//! The spatial domain is symmetric about the origin and the lattice is
//! reflection-closed: for every node index m, the index M - m addresses the
//! node at -x_m. The reflection operator below is therefore a pure index
//! permutation and commits no floating-point motion, which is what makes the
//! non-local constraint u(t,x) >= u(t,-x) + psi(t,x) exactly representable
//! on the mesh.

use std::io::Write;

use crate::error::{Error, Result};

/// Uniform discretization of [0,T] x [-a,a] with M spatial and N temporal
/// intervals. Nodes are x_m = -a + m*dx (m = 0..=M) and t_n = n*dt (n = 0..=N).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    half_width: f64,
    horizon: f64,
    space_intervals: usize,
    time_intervals: usize,
}

impl Grid {
    /// Build a grid, rejecting non-positive extents, M < 2 or N < 1.
    pub fn new(
        half_width: f64,
        horizon: f64,
        space_intervals: usize,
        time_intervals: usize,
    ) -> Result<Self> {
        if !half_width.is_finite() || half_width <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "domain half-width must be positive, got {half_width}"
            )));
        }
        if !horizon.is_finite() || horizon <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "time horizon must be positive, got {horizon}"
            )));
        }
        if space_intervals < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least 2 spatial intervals, got {space_intervals}"
            )));
        }
        if time_intervals < 1 {
            return Err(Error::InvalidParameter(format!(
                "need at least 1 time interval, got {time_intervals}"
            )));
        }
        Ok(Grid {
            half_width,
            horizon,
            space_intervals,
            time_intervals,
        })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Number of spatial intervals M.
    pub fn space_intervals(&self) -> usize {
        self.space_intervals
    }

    /// Number of time intervals N.
    pub fn time_intervals(&self) -> usize {
        self.time_intervals
    }

    /// Number of spatial nodes, M + 1.
    pub fn space_nodes(&self) -> usize {
        self.space_intervals + 1
    }

    /// Number of time levels, N + 1.
    pub fn time_levels(&self) -> usize {
        self.time_intervals + 1
    }

    pub fn dx(&self) -> f64 {
        2.0 * self.half_width / self.space_intervals as f64
    }

    pub fn dt(&self) -> f64 {
        self.horizon / self.time_intervals as f64
    }

    /// Spatial node coordinate. Evaluated as a*(2m - M)/M so that
    /// x(M - m) == -x(m) holds bit-exactly.
    pub fn x(&self, m: usize) -> f64 {
        debug_assert!(m <= self.space_intervals);
        let num = 2 * m as i64 - self.space_intervals as i64;
        self.half_width * num as f64 / self.space_intervals as f64
    }

    /// Time node coordinate t_n = T*n/N (exact at both ends).
    pub fn t(&self, n: usize) -> f64 {
        debug_assert!(n <= self.time_intervals);
        self.horizon * n as f64 / self.time_intervals as f64
    }

    /// Index of the node at -x_m.
    pub fn reflect_index(&self, m: usize) -> usize {
        debug_assert!(m <= self.space_intervals);
        self.space_intervals - m
    }

    /// Index of the time level nearest to t (ties round up).
    pub fn nearest_level(&self, t: f64) -> usize {
        let raw = t / self.dt();
        let n = raw.round() as i64;
        n.clamp(0, self.time_intervals as i64) as usize
    }
}

/// Real values attached to every node of a grid, stored row-major in the
/// time index. Fields keep the whole space-time matrix so any time slice can
/// be inspected after a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid,
    values: Vec<f64>,
}

impl Field {
    /// All-zero field.
    pub fn zeros(grid: Grid) -> Self {
        Field {
            grid,
            values: vec![0.0; grid.time_levels() * grid.space_nodes()],
        }
    }

    /// Evaluate f(t_n, x_m) at every node. Rejects non-finite samples.
    pub fn sample(grid: Grid, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.time_levels() * grid.space_nodes());
        for n in 0..grid.time_levels() {
            let t = grid.t(n);
            for m in 0..grid.space_nodes() {
                let v = f(t, grid.x(m));
                if !v.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "sampled function is not finite at t = {t}, x = {}",
                        grid.x(m)
                    )));
                }
                values.push(v);
            }
        }
        Ok(Field { grid, values })
    }

    /// Wrap raw values; the shape must match (N+1) x (M+1) and all entries
    /// must be finite.
    pub fn from_values(grid: Grid, values: Vec<f64>) -> Result<Self> {
        let expect = grid.time_levels() * grid.space_nodes();
        if values.len() != expect {
            return Err(Error::InvalidParameter(format!(
                "field shape mismatch: got {} values, expected {expect}",
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "field contains non-finite value {bad}"
            )));
        }
        Ok(Field { grid, values })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    #[inline]
    pub fn at(&self, n: usize, m: usize) -> f64 {
        self.values[n * self.grid.space_nodes() + m]
    }

    #[inline]
    pub fn set(&mut self, n: usize, m: usize, v: f64) {
        self.values[n * self.grid.space_nodes() + m] = v;
    }

    /// Spatial slice at time level n.
    pub fn level(&self, n: usize) -> &[f64] {
        let w = self.grid.space_nodes();
        &self.values[n * w..(n + 1) * w]
    }

    pub fn set_level(&mut self, n: usize, row: &[f64]) {
        let w = self.grid.space_nodes();
        self.values[n * w..(n + 1) * w].copy_from_slice(row);
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The field (n, m) -> self(n, M - m). Realizes u(t,x) -> u(t,-x) as an
    /// index permutation, so reflecting twice restores the input exactly.
    pub fn reflected(&self) -> Field {
        let w = self.grid.space_nodes();
        let mut values = Vec::with_capacity(self.values.len());
        for n in 0..self.grid.time_levels() {
            let row = &self.values[n * w..(n + 1) * w];
            values.extend(row.iter().rev());
        }
        Field {
            grid: self.grid,
            values,
        }
    }

    /// max over all nodes of |self - other|.
    pub fn max_abs_diff(&self, other: &Field) -> f64 {
        assert_eq!(self.grid, other.grid, "fields live on different grids");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// min over all nodes of (self - other); negative when self dips below other.
    pub fn min_diff(&self, other: &Field) -> f64 {
        assert_eq!(self.grid, other.grid, "fields live on different grids");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Serialize as `t,x,u` rows, row-major in n then m, 17 significant
    /// digits so values round-trip bit-exactly.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "t,x,u")?;
        for n in 0..self.grid.time_levels() {
            let t = self.grid.t(n);
            for m in 0..self.grid.space_nodes() {
                writeln!(
                    w,
                    "{},{},{}",
                    fmt_f64(t),
                    fmt_f64(self.grid.x(m)),
                    fmt_f64(self.at(n, m))
                )?;
            }
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to Vec cannot fail");
        String::from_utf8(buf).expect("csv output is valid utf-8")
    }
}

/// Format with 17 significant digits; parsing the result recovers the exact
/// double.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}
