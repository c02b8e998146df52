//! Uniform-grid nearest-neighbour index over planar points.

use crate::group::ComplexPoint;

const TARGET_PER_CELL: f64 = 2.0;
const MAX_CELLS_PER_AXIS: usize = 2048;

#[derive(Debug, Clone)]
pub struct GridIndex {
    points: Vec<ComplexPoint>,
    min_x: f64,
    min_y: f64,
    cell: f64,
    nx: usize,
    ny: usize,
    // CSR layout: indices of points in cell c are order[starts[c]..starts[c + 1]]
    starts: Vec<usize>,
    order: Vec<usize>,
}

impl GridIndex {
    /// Builds the index. Non-finite points are skipped.
    pub fn new(points: &[ComplexPoint]) -> Self {
        let points: Vec<ComplexPoint> = points.iter().copied().filter(|p| p.is_finite()).collect();
        let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for p in &points {
            min_x = min_x.min(p.x);
            min_y = min_y.min(p.y);
            max_x = max_x.max(p.x);
            max_y = max_y.max(p.y);
        }
        if points.is_empty() {
            (min_x, min_y, max_x, max_y) = (0.0, 0.0, 0.0, 0.0);
        }
        let (w, h) = (max_x - min_x, max_y - min_y);
        let n = points.len().max(1) as f64;
        let mut cell = ((w * h) * TARGET_PER_CELL / n).sqrt();
        if !(cell > 0.0) {
            // degenerate (collinear or single) cloud
            cell = w.max(h) * TARGET_PER_CELL / n;
        }
        if !(cell > 0.0) {
            cell = 1.0;
        }
        cell = cell.max(w / (MAX_CELLS_PER_AXIS - 1) as f64).max(h / (MAX_CELLS_PER_AXIS - 1) as f64);
        let nx = ((w / cell).floor() as usize + 1).min(MAX_CELLS_PER_AXIS);
        let ny = ((h / cell).floor() as usize + 1).min(MAX_CELLS_PER_AXIS);

        let mut index = Self { points, min_x, min_y, cell, nx, ny, starts: Vec::new(), order: Vec::new() };
        let cell_of: Vec<usize> = index.points.iter().map(|&p| index.cell_id(index.cell_coords(p))).collect();
        let mut counts = vec![0usize; nx * ny + 1];
        for &c in &cell_of {
            counts[c + 1] += 1;
        }
        for i in 1..counts.len() {
            counts[i] += counts[i - 1];
        }
        let mut fill = counts.clone();
        let mut order = vec![0usize; index.points.len()];
        for (i, &c) in cell_of.iter().enumerate() {
            order[fill[c]] = i;
            fill[c] += 1;
        }
        index.starts = counts;
        index.order = order;
        index
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn cell_coords(&self, p: ComplexPoint) -> (usize, usize) {
        let cx = ((p.x - self.min_x) / self.cell).floor().clamp(0.0, (self.nx - 1) as f64) as usize;
        let cy = ((p.y - self.min_y) / self.cell).floor().clamp(0.0, (self.ny - 1) as f64) as usize;
        (cx, cy)
    }

    fn cell_id(&self, (cx, cy): (usize, usize)) -> usize {
        cy * self.nx + cx
    }

    fn scan_cell(&self, cx: usize, cy: usize, p: ComplexPoint, best: &mut (usize, f64)) {
        let c = self.cell_id((cx, cy));
        if self.starts[c] == self.starts[c + 1] {
            return;
        }
        // skip cells that cannot beat the current best
        let x0 = self.min_x + cx as f64 * self.cell;
        let y0 = self.min_y + cy as f64 * self.cell;
        let dx = (x0 - p.x).max(p.x - x0 - self.cell).max(0.0);
        let dy = (y0 - p.y).max(p.y - y0 - self.cell).max(0.0);
        if dx.hypot(dy) > best.1 {
            return;
        }
        for &i in &self.order[self.starts[c]..self.starts[c + 1]] {
            let d = p.dist(self.points[i]);
            if d < best.1 {
                *best = (i, d);
            }
        }
    }

    /// Distance from `p` to the closest cell outside the box of rings `0..=r`
    /// around `(cx, cy)`; infinite once the box covers the grid.
    fn unvisited_bound(&self, p: ComplexPoint, cx: usize, cy: usize, r: usize) -> f64 {
        let mut bound = f64::INFINITY;
        if cx > r {
            bound = bound.min(p.x - (self.min_x + (cx - r) as f64 * self.cell));
        }
        if cx + r + 1 < self.nx {
            bound = bound.min(self.min_x + (cx + r + 1) as f64 * self.cell - p.x);
        }
        if cy > r {
            bound = bound.min(p.y - (self.min_y + (cy - r) as f64 * self.cell));
        }
        if cy + r + 1 < self.ny {
            bound = bound.min(self.min_y + (cy + r + 1) as f64 * self.cell - p.y);
        }
        bound.max(0.0)
    }

    /// Index (into the filtered point list) and distance of the closest point.
    pub fn nearest(&self, p: ComplexPoint) -> Option<(usize, f64)> {
        if self.points.is_empty() || !p.is_finite() {
            return None;
        }
        let (cx, cy) = self.cell_coords(p);
        let mut best = (usize::MAX, f64::INFINITY);
        for r in 0.. {
            let x_lo = cx.saturating_sub(r);
            let x_hi = (cx + r).min(self.nx - 1);
            let y_lo = cy.saturating_sub(r);
            let y_hi = (cy + r).min(self.ny - 1);
            for y in y_lo..=y_hi {
                if y + r == cy || y == cy + r {
                    for x in x_lo..=x_hi {
                        self.scan_cell(x, y, p, &mut best);
                    }
                } else {
                    if cx >= r {
                        self.scan_cell(cx - r, y, p, &mut best);
                    }
                    if r > 0 && cx + r < self.nx {
                        self.scan_cell(cx + r, y, p, &mut best);
                    }
                }
            }
            let bound = self.unvisited_bound(p, cx, cy, r);
            if best.1 <= bound || bound.is_infinite() {
                break;
            }
        }
        Some(best)
    }

    pub fn nearest_distance(&self, p: ComplexPoint) -> f64 {
        self.nearest(p).map_or(f64::INFINITY, |(_, d)| d)
    }

    pub fn any_within(&self, p: ComplexPoint, tol: f64) -> bool {
        self.nearest_distance(p) <= tol
    }
}
