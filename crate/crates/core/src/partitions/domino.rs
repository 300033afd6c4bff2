//! Domino tilings of skew shapes.

use super::SkewShape;

/// A domino whose top-left cell is `(row, col)` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub vertical: bool,
}

impl Domino {
    fn columns(&self) -> (usize, usize) {
        if self.vertical {
            (self.col, self.col)
        } else {
            (self.col, self.col + 1)
        }
    }
}

struct Grid {
    rows: Vec<(usize, usize)>,
    filled: Vec<Vec<bool>>,
}

impl Grid {
    fn new(shape: &SkewShape) -> Self {
        let rows = shape.rows();
        let filled = rows.iter().map(|&(a, b)| vec![false; b - a]).collect();
        Grid { rows, filled }
    }

    fn in_shape(&self, r: usize, c: usize) -> bool {
        r < self.rows.len() && self.rows[r].0 <= c && c < self.rows[r].1
    }

    fn free(&self, r: usize, c: usize) -> bool {
        self.in_shape(r, c) && !self.filled[r][c - self.rows[r].0]
    }

    fn set(&mut self, r: usize, c: usize, v: bool) {
        let a = self.rows[r].0;
        self.filled[r][c - a] = v;
    }

    fn first_free(&self) -> Option<(usize, usize)> {
        for (r, &(a, b)) in self.rows.iter().enumerate() {
            for c in a..b {
                if !self.filled[r][c - a] {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Depth-first enumeration; `visit` returns false to stop.
    fn search(&mut self, stack: &mut Vec<Domino>, visit: &mut dyn FnMut(&[Domino]) -> bool) -> bool {
        let Some((r, c)) = self.first_free() else {
            return visit(stack);
        };
        if self.free(r, c + 1) {
            self.set(r, c, true);
            self.set(r, c + 1, true);
            stack.push(Domino { row: r, col: c, vertical: false });
            let go_on = self.search(stack, visit);
            stack.pop();
            self.set(r, c, false);
            self.set(r, c + 1, false);
            if !go_on {
                return false;
            }
        }
        if self.free(r + 1, c) {
            self.set(r, c, true);
            self.set(r + 1, c, true);
            stack.push(Domino { row: r, col: c, vertical: true });
            let go_on = self.search(stack, visit);
            stack.pop();
            self.set(r, c, false);
            self.set(r + 1, c, false);
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn for_each_tiling(shape: &SkewShape, visit: &mut dyn FnMut(&[Domino]) -> bool) {
    if shape.size() % 2 == 1 {
        return;
    }
    let mut grid = Grid::new(shape);
    let mut stack = Vec::new();
    grid.search(&mut stack, visit);
}

pub(super) fn first_tiling(shape: &SkewShape) -> Option<Vec<Domino>> {
    let mut found = None;
    for_each_tiling(shape, &mut |t| {
        found = Some(t.to_vec());
        false
    });
    found
}

/// Every domino tiling of the shape.
pub fn domino_tilings(shape: &SkewShape) -> Vec<Vec<Domino>> {
    let mut out = Vec::new();
    for_each_tiling(shape, &mut |t| {
        out.push(t.to_vec());
        true
    });
    out
}

/// Number of domino tableaux of the shape with every domino labelled 1, i.e.
/// tilings in which no column meets two different dominoes. With a single
/// letter the Yamanouchi condition is automatic.
pub fn yamanouchi_domino_count(shape: &SkewShape) -> usize {
    let mut count = 0;
    for_each_tiling(shape, &mut |t| {
        let mut used = std::collections::HashSet::new();
        let ok = t.iter().all(|d| {
            let (a, b) = d.columns();
            let fresh_a = used.insert(a);
            let fresh_b = a == b || used.insert(b);
            fresh_a && fresh_b
        });
        if ok {
            count += 1;
        }
        true
    });
    count
}
