//! Pictures, boundary pictures, their text format, and exhaustive
//! enumeration.

use std::fmt;

use thiserror::Error;

use crate::symbol::{Symbol, BOUNDARY};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PictureError {
    #[error("line {line}: bad header `{text}` (expected `<rows> <cols>`)")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected {expected} symbols, found {found}")]
    Ragged { line: usize, expected: usize, found: usize },
    #[error("line {line}: reserved symbol `#` in picture body")]
    ReservedSymbol { line: usize },
    #[error("expected {expected} rows, found {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("dimensions {rows}x{cols}: only the empty picture may have a zero dimension")]
    ZeroDimension { rows: usize, cols: usize },
    #[error("cell count {cells} does not match dimensions {rows}x{cols}")]
    CellCount { rows: usize, cols: usize, cells: usize },
}

/// A rectangular grid of symbols, addressed 1-based as `(row, col)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Picture {
    rows: usize,
    cols: usize,
    cells: Vec<Symbol>,
}

impl Picture {
    /// The empty picture of dimensions (0, 0).
    pub fn empty() -> Picture {
        Picture { rows: 0, cols: 0, cells: Vec::new() }
    }

    pub fn new(rows: usize, cols: usize, cells: Vec<Symbol>) -> Result<Picture, PictureError> {
        if (rows == 0) != (cols == 0) {
            return Err(PictureError::ZeroDimension { rows, cols });
        }
        if cells.len() != rows * cols {
            return Err(PictureError::CellCount { rows, cols, cells: cells.len() });
        }
        if cells.iter().any(Symbol::is_boundary) {
            return Err(PictureError::ReservedSymbol { line: 0 });
        }
        Ok(Picture { rows, cols, cells })
    }

    /// Builds a picture from rows of single-character symbols, e.g.
    /// `["ab", "ba"]`.
    pub fn from_rows(rows: &[&str]) -> Result<Picture, PictureError> {
        let cols = rows.first().map_or(0, |r| r.chars().count());
        let mut cells = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            let found = r.chars().count();
            if found != cols {
                return Err(PictureError::Ragged { line: i + 1, expected: cols, found });
            }
            cells.extend(r.chars().map(|c| Symbol::from(c.to_string())));
        }
        Picture::new(rows.len(), cols, cells)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// Cell at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Symbol {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "position ({row}, {col}) outside {}x{} picture",
            self.rows,
            self.cols
        );
        &self.cells[(row - 1) * self.cols + (col - 1)]
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    /// Cells of the 1-based row `row`.
    pub fn row(&self, row: usize) -> &[Symbol] {
        &self.cells[(row - 1) * self.cols..row * self.cols]
    }

    /// Number of cells holding `s`.
    pub fn count(&self, s: &str) -> usize {
        self.cells.iter().filter(|c| c.as_str() == s).count()
    }

    pub fn boundary(&self) -> BoundaryPicture {
        BoundaryPicture::new(self.clone())
    }
}

impl fmt::Debug for Picture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Picture({}x{}", self.rows, self.cols)?;
        for r in 1..=self.rows {
            f.write_str(if r == 1 { ": " } else { " / " })?;
            for s in self.row(r) {
                write!(f, "{s}")?;
            }
        }
        f.write_str(")")
    }
}

/// One line: `2x2: a b / b a`. Use [`render_picture`] for the file format.
impl fmt::Display for Picture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)?;
        for r in 1..=self.rows {
            let row: Vec<&str> = self.row(r).iter().map(Symbol::as_str).collect();
            write!(f, "{}{}", if r == 1 { ": " } else { " / " }, row.join(" "))?;
        }
        Ok(())
    }
}

/// A picture framed by `#` on all four sides. Positions range over
/// `0..=rows+1` and `0..=cols+1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoundaryPicture {
    inner: Picture,
    boundary: Symbol,
}

impl BoundaryPicture {
    pub fn new(inner: Picture) -> BoundaryPicture {
        BoundaryPicture { inner, boundary: Symbol::boundary() }
    }

    pub fn inner(&self) -> &Picture {
        &self.inner
    }

    pub fn into_inner(self) -> Picture {
        self.inner
    }

    /// Dimensions including the frame.
    pub fn rows(&self) -> usize {
        self.inner.rows + 2
    }

    pub fn cols(&self) -> usize {
        self.inner.cols + 2
    }

    pub fn is_frame(&self, row: usize, col: usize) -> bool {
        row == 0 || col == 0 || row == self.inner.rows + 1 || col == self.inner.cols + 1
    }

    pub fn get(&self, row: usize, col: usize) -> &Symbol {
        assert!(row < self.rows() && col < self.cols(), "position ({row}, {col}) outside frame");
        if self.is_frame(row, col) {
            &self.boundary
        } else {
            self.inner.get(row, col)
        }
    }
}

/// Frames a picture with `#`.
pub fn boundary(p: &Picture) -> BoundaryPicture {
    p.boundary()
}

/// Parses the picture file format: a `rows cols` header followed by `rows`
/// lines of `cols` whitespace-separated symbols. Blank lines are ignored.
pub fn parse_picture(text: &str) -> Result<Picture, PictureError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(PictureError::BadHeader {
        line: 1,
        text: String::new(),
    })?;
    let bad_header = || PictureError::BadHeader { line: hline, text: header.to_owned() };
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, c] = dims[..] else {
        return Err(bad_header());
    };
    let rows: usize = r.parse().map_err(|_| bad_header())?;
    let cols: usize = c.parse().map_err(|_| bad_header())?;
    if (rows == 0) != (cols == 0) {
        return Err(PictureError::ZeroDimension { rows, cols });
    }
    let mut cells = Vec::with_capacity(rows * cols);
    let mut found_rows = 0;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != cols || found_rows == rows {
            return Err(PictureError::Ragged { line, expected: cols, found: toks.len() });
        }
        if toks.contains(&BOUNDARY) {
            return Err(PictureError::ReservedSymbol { line });
        }
        cells.extend(toks.into_iter().map(Symbol::from));
        found_rows += 1;
    }
    if found_rows != rows {
        return Err(PictureError::MissingRows { expected: rows, found: found_rows });
    }
    Picture::new(rows, cols, cells)
}

/// Renders the normalized text form: header, then one line per row with
/// single spaces between symbols and a trailing newline.
pub fn render_picture(p: &Picture) -> String {
    let mut out = format!("{} {}\n", p.rows, p.cols);
    for r in 1..=p.rows {
        let row: Vec<&str> = p.row(r).iter().map(Symbol::as_str).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Shapes in enumeration order: the empty picture first, then nonempty
/// shapes by area, then rows.
pub fn shapes(max_rows: usize, max_cols: usize) -> Vec<(usize, usize)> {
    let mut shapes: Vec<(usize, usize)> = (1..=max_rows)
        .flat_map(|m| (1..=max_cols).map(move |n| (m, n)))
        .collect();
    shapes.sort_by_key(|&(m, n)| (m * n, m, n));
    shapes.insert(0, (0, 0));
    shapes
}

/// Iterates every picture over `alphabet` with at most `max_rows` rows and
/// `max_cols` columns exactly once. Order: [`shapes`], then lexicographic by
/// row-major cells with the alphabet order as given.
pub fn enumerate_pictures(
    alphabet: &[Symbol],
    max_rows: usize,
    max_cols: usize,
) -> impl Iterator<Item = Picture> + '_ {
    shapes(max_rows, max_cols)
        .into_iter()
        .flat_map(move |(m, n)| pictures_of_shape(alphabet, m, n))
}

/// All pictures of one shape, lexicographically.
pub fn pictures_of_shape(
    alphabet: &[Symbol],
    rows: usize,
    cols: usize,
) -> impl Iterator<Item = Picture> + '_ {
    let cells = rows * cols;
    let k = alphabet.len();
    let total = if cells == 0 {
        1
    } else if k == 0 {
        0
    } else {
        k.checked_pow(cells as u32).expect("too many pictures to enumerate")
    };
    (0..total).map(move |mut index| {
        let mut digits = vec![0usize; cells];
        for d in digits.iter_mut().rev() {
            *d = index % k.max(1);
            index /= k.max(1);
        }
        let cells = digits.into_iter().map(|d| alphabet[d].clone()).collect();
        Picture { rows, cols, cells }
    })
}

/// Number of pictures [`enumerate_pictures`] yields.
pub fn picture_count(alphabet_len: usize, max_rows: usize, max_cols: usize) -> usize {
    shapes(max_rows, max_cols)
        .into_iter()
        .map(|(m, n)| alphabet_len.pow((m * n) as u32))
        .sum()
}

/// All strings over `alphabet` with length in `lengths`, shorter first,
/// lexicographic within a length.
pub fn enumerate_strings(
    alphabet: &[Symbol],
    lengths: std::ops::RangeInclusive<usize>,
) -> impl Iterator<Item = Vec<Symbol>> + '_ {
    lengths.flat_map(move |len| {
        pictures_of_shape(alphabet, usize::from(len > 0), len).map(|p| p.cells)
    })
}
