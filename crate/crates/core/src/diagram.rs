//! Box diagrams of staircase compositions, the polygonal c-path, and the
//! ladder moves that witness a cover geometrically.
//!
//! Row `r` of a diagram (counted bottom to top) holds boxes at columns
//! `1..=α_r`; the box at `(r, col)` corresponds to the letter `s_{r+col-1}`.

use serde::Serialize;

use crate::composition::Composition;
use crate::error::{check_range, Error, Result};

/// Occupancy grid over rows and columns `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxDiagram {
    n: usize,
    cells: Vec<Vec<bool>>,
}

impl BoxDiagram {
    pub fn from_composition(alpha: &Composition) -> Self {
        let n = alpha.degree();
        let width = n.saturating_sub(1);
        let cells = (1..n)
            .map(|r| (1..=width).map(|col| col <= alpha.part(r)).collect())
            .collect();
        BoxDiagram { n, cells }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn occupied(&self, row: usize, col: usize) -> bool {
        row >= 1
            && col >= 1
            && self
                .cells
                .get(row - 1)
                .and_then(|r| r.get(col - 1))
                .copied()
                .unwrap_or(false)
    }

    fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cells[row - 1][col - 1] = value;
    }

    pub fn remove_box(&self, row: usize, col: usize) -> Result<BoxDiagram> {
        if !self.occupied(row, col) {
            return Err(Error::UnoccupiedBox { row, column: col });
        }
        let mut d = self.clone();
        d.set(row, col, false);
        Ok(d)
    }

    pub fn box_count(&self) -> usize {
        self.cells.iter().flatten().filter(|&&b| b).count()
    }

    /// The composition drawn by this diagram, if every row is left-justified.
    pub fn to_composition(&self) -> Option<Composition> {
        let mut parts = Vec::with_capacity(self.cells.len());
        for row in &self.cells {
            let len = row.iter().take_while(|&&b| b).count();
            if row[len..].iter().any(|&b| b) {
                return None;
            }
            parts.push(len);
        }
        Composition::new(parts, self.n).ok()
    }

    /// Where a ladder move sends the box at `(row, col)`, if anywhere.
    ///
    /// The box climbs through rows holding both columns `col - 1` and `col`
    /// and lands one column to the left in the first row where both are empty.
    /// A row holding only column `col - 1` blocks the move.
    pub fn ladder_destination(&self, row: usize, col: usize) -> Result<Option<(usize, usize)>> {
        if !self.occupied(row, col) {
            return Err(Error::UnoccupiedBox { row, column: col });
        }
        if col == 1 {
            return Ok(None);
        }
        for k in row + 1..self.n {
            match (self.occupied(k, col - 1), self.occupied(k, col)) {
                (true, true) => continue,
                (false, false) if col - 1 <= self.n - k => return Ok(Some((k, col - 1))),
                _ => return Ok(None),
            }
        }
        Ok(None)
    }

    /// Applies one ladder move to the box at `(row, col)`.
    pub fn ladder_move(&self, row: usize, col: usize) -> Result<Option<BoxDiagram>> {
        Ok(self.ladder_destination(row, col)?.map(|(r, c)| {
            let mut d = self.clone();
            d.set(row, col, false);
            d.set(r, c, true);
            d
        }))
    }

    pub fn render(&self, opts: &RenderOptions) -> String {
        self.render_cells(opts, |r, c| self.occupied(r, c).then_some(opts.glyph))
    }

    fn render_cells(
        &self,
        opts: &RenderOptions,
        cell: impl Fn(usize, usize) -> Option<char>,
    ) -> String {
        if (1..self.n).all(|r| (1..self.n).all(|c| cell(r, c).is_none())) {
            return String::new();
        }
        let mut rows: Vec<usize> = (1..self.n).collect();
        if !opts.top_down {
            rows.reverse();
        }
        let mut out = String::new();
        for r in rows {
            let line: String = (1..self.n).map(|c| cell(r, c).unwrap_or(' ')).collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub glyph: char,
    /// Print row 1 first instead of last.
    pub top_down: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            glyph: '□',
            top_down: false,
        }
    }
}

/// One line per row, highest row first; empty when `α` has no boxes.
pub fn render(alpha: &Composition, opts: &RenderOptions) -> String {
    BoxDiagram::from_composition(alpha).render(opts)
}

/// A vertex of the c-path: after handling `row`, the path sits at `column`
/// having moved left `shift` times in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathVertex {
    pub row: usize,
    pub column: usize,
    pub shift: usize,
}

/// The polygonal path from the last box of row `i`.
///
/// The path moves straight up through a row whose box at the current column
/// is present, and one column left otherwise. The shift recorded at row `r`
/// equals `c_{i,r+1}(α)`. Rows run from `i` to `n`.
pub fn c_path(alpha: &Composition, i: usize) -> Result<Vec<PathVertex>> {
    check_range("row", i, 1, alpha.degree() - 1)?;
    let top = alpha.part(i);
    if top == 0 {
        return Err(Error::EmptyRow(i));
    }
    let mut path = vec![PathVertex {
        row: i,
        column: top,
        shift: 0,
    }];
    let (mut column, mut shift) = (top, 0);
    for row in i + 1..=alpha.degree() {
        if alpha.part(row) < column {
            column -= 1;
            shift += 1;
        }
        path.push(PathVertex { row, column, shift });
    }
    Ok(path)
}

/// Diagram of `α` with the c-path of row `i` drawn over it: `*` at the
/// start, `|` after a vertical step and `/` after a diagonal one.
pub fn render_with_path(alpha: &Composition, i: usize, opts: &RenderOptions) -> Result<String> {
    let path = c_path(alpha, i)?;
    let d = BoxDiagram::from_composition(alpha);
    let mark = |r: usize, c: usize| {
        path.iter().enumerate().find_map(|(k, v)| {
            (v.row == r && v.column == c).then(|| match k {
                0 => '*',
                _ if path[k - 1].shift == v.shift => '|',
                _ => '/',
            })
        })
    };
    Ok(d.render_cells(opts, |r, c| {
        mark(r, c).or_else(|| d.occupied(r, c).then_some(opts.glyph))
    }))
}

/// Ladder-move search for the `(i,z)`-removing of `α`.
///
/// Box `α_i - z + 1` of row `i` is deleted; every box to its right is then
/// moved, leftmost first, by ladder moves until it sits flush at the end of
/// some row. Returns every intermediate diagram (starting with the one after
/// the deletion), or `None` when a move is blocked, boxes end in different
/// rows, or the final diagram is not a staircase composition.
pub fn ladder_sequence(alpha: &Composition, i: usize, z: usize) -> Result<Option<Vec<BoxDiagram>>> {
    check_range("row", i, 1, alpha.degree() - 1)?;
    let top = alpha.part(i);
    if z == 0 || z > top {
        return Err(Error::AmountOutOfRange { i, z, max: top });
    }
    let gap = top - z + 1;
    let mut d = BoxDiagram::from_composition(alpha).remove_box(i, gap)?;
    let mut steps = vec![d.clone()];
    let mut landing_row = None;
    for start in gap + 1..=top {
        let (mut row, mut col) = (i, start);
        while col > 1 && !d.occupied(row, col - 1) {
            let Some((r, c)) = d.ladder_destination(row, col)? else {
                return Ok(None);
            };
            d.set(row, col, false);
            d.set(r, c, true);
            steps.push(d.clone());
            (row, col) = (r, c);
        }
        if *landing_row.get_or_insert(row) != row {
            return Ok(None);
        }
    }
    Ok(d.to_composition().map(|_| steps))
}

/// Geometric removability test: the composition reached by ladder moves, if any.
pub fn geometric_removable(alpha: &Composition, i: usize, z: usize) -> Result<Option<Composition>> {
    Ok(ladder_sequence(alpha, i, z)?
        .and_then(|steps| steps.last().and_then(BoxDiagram::to_composition)))
}
