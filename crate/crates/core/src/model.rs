//! Foundational value types: compositions, codewords, codes and edge-colored
//! digraphs, together with the metric and counting primitives used everywhere
//! else.
//!
//! Conventions: vertices are the integers `1..=n`, colors are `1..=r`. A pair
//! color `(i, j)` over a base palette of size `b` is stored as the integer
//! `(i - 1) * b + j`; see [`pair_color`]. All types here are immutable values
//! and all operations are pure.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Per-symbol multiplicities `[w_1, ..., w_{q-1}]` of the nonzero entries of a
/// codeword over `Z_q`. Index `i` (1-based) is the multiplicity of symbol `i`.
///
/// Parts are stored exactly as given; the constant-composition convention
/// `w_1 >= w_2 >= ... > 0` is a property ([`Composition::is_monotone`]), not a
/// normalization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// A composition for alphabet size `parts.len() + 1`. Zero parts are
    /// allowed (generalized compositions); the empty list is not.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts (q must be >= 2)".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Alphabet size `q = parts.len() + 1`.
    pub fn q(&self) -> u32 {
        self.parts.len() as u32 + 1
    }

    /// Total weight `w = sum of parts`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `w_1 >= w_2 >= ... >= w_{q-1} > 0`.
    pub fn is_monotone(&self) -> bool {
        self.parts.windows(2).all(|p| p[0] >= p[1]) && *self.parts.last().unwrap() > 0
    }

    pub fn require_monotone(&self) -> Result<()> {
        if self.is_monotone() {
            Ok(())
        } else {
            Err(Error::InvalidComposition(format!(
                "{self} is not monotone with positive parts"
            )))
        }
    }

    /// Parse `"2,1"` style flag values.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A vector over `Z_q` of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    symbols: Vec<u32>,
    q: u32,
}

impl Codeword {
    pub fn new(symbols: Vec<u32>, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("alphabet size {q} < 2")));
        }
        if let Some(s) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::InvalidCode(format!("symbol {s} out of range for q={q}")));
        }
        Ok(Codeword { symbols, q })
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// 1-based positions carrying a nonzero symbol, ascending.
    pub fn support(&self) -> Vec<u32> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// Hamming weight: the size of the support.
    pub fn weight(&self) -> u32 {
        self.symbols.iter().filter(|&&s| s != 0).count() as u32
    }
}

/// Number of positions where `u` and `v` differ.
pub fn hamming_distance(u: &Codeword, v: &Codeword) -> Result<u32> {
    if u.len() != v.len() || u.q() != v.q() {
        return Err(Error::Dimension(format!(
            "cannot compare a word of length {} over q={} with one of length {} over q={}",
            u.len(),
            u.q(),
            v.len(),
            v.q()
        )));
    }
    Ok(u.symbols
        .iter()
        .zip(&v.symbols)
        .filter(|(a, b)| a != b)
        .count() as u32)
}

/// Per-symbol counts of the nonzero entries of `u`, as a length `q-1`
/// composition indexed by symbol value. May be all zero for the zero word.
pub fn composition_of(u: &Codeword) -> Composition {
    let mut parts = vec![0u32; u.q() as usize - 1];
    for &s in &u.symbols {
        if s != 0 {
            parts[s as usize - 1] += 1;
        }
    }
    Composition { parts }
}

/// A set of distinct codewords of common length and alphabet, optionally with
/// a declared minimum distance (validated at construction).
#[derive(Debug, Clone)]
pub struct Code {
    q: u32,
    n: u32,
    codewords: Vec<Codeword>,
    declared_distance: Option<u32>,
}

impl Code {
    pub fn new(q: u32, n: u32, codewords: Vec<Codeword>, declared_distance: Option<u32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for w in &codewords {
            if w.q() != q {
                return Err(Error::InvalidCode(format!("codeword alphabet {} != {q}", w.q())));
            }
            if w.len() != n as usize {
                return Err(Error::InvalidCode(format!("codeword length {} != {n}", w.len())));
            }
            if !seen.insert(w.symbols().to_vec()) {
                return Err(Error::InvalidCode(format!("duplicate codeword {:?}", w.symbols())));
            }
        }
        if let Some(d) = declared_distance {
            for i in 0..codewords.len() {
                for j in i + 1..codewords.len() {
                    let dist = hamming_distance(&codewords[i], &codewords[j])?;
                    if dist < d {
                        return Err(Error::InvalidCode(format!(
                            "declared distance {d} violated: words {i} and {j} are at distance {dist}"
                        )));
                    }
                }
            }
        }
        Ok(Code { q, n, codewords, declared_distance })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn codewords(&self) -> &[Codeword] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn declared_distance(&self) -> Option<u32> {
        self.declared_distance
    }

    /// Smallest pairwise distance, or `None` for codes with fewer than two
    /// words.
    pub fn min_distance(&self) -> Result<Option<u32>> {
        let mut min = None;
        for i in 0..self.codewords.len() {
            for j in i + 1..self.codewords.len() {
                let d = hamming_distance(&self.codewords[i], &self.codewords[j])?;
                min = Some(min.map_or(d, |m: u32| m.min(d)));
            }
        }
        Ok(min)
    }
}

/// One word of a multiply constant-weight code: an `m x n` binary array in
/// which every row has exactly `w` ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McwcWord {
    rows: Vec<Vec<u8>>,
    w: u32,
}

impl McwcWord {
    pub fn new(rows: Vec<Vec<u8>>, w: u32) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidCode("MCWC word with no rows".into()));
        }
        let n = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCode(format!("row {} has length {} != {n}", i + 1, row.len())));
            }
            if let Some(&b) = row.iter().find(|&&b| b > 1) {
                return Err(Error::InvalidCode(format!("non-binary entry {b}")));
            }
            let ones = row.iter().filter(|&&b| b == 1).count() as u32;
            if ones != w {
                return Err(Error::InvalidCode(format!(
                    "row {} has weight {ones}, expected {w}",
                    i + 1
                )));
            }
        }
        Ok(McwcWord { rows, w })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn m(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn n(&self) -> u32 {
        self.rows[0].len() as u32
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    /// 1-based support of row `i` (1-based).
    pub fn row_support(&self, i: u32) -> Vec<u32> {
        self.rows[i as usize - 1]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(j, _)| j as u32 + 1)
            .collect()
    }

    /// Flat row-major bit vector of length `m * n`.
    pub fn flat(&self) -> Vec<u8> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Hamming distance between two MCWC words of the same shape.
pub fn mcwc_distance(u: &McwcWord, v: &McwcWord) -> Result<u32> {
    if u.m() != v.m() || u.n() != v.n() {
        return Err(Error::Dimension(format!(
            "cannot compare {}x{} word with {}x{} word",
            u.m(),
            u.n(),
            v.m(),
            v.n()
        )));
    }
    Ok(u.flat().iter().zip(v.flat()).filter(|(a, b)| **a != *b).count() as u32)
}

/// A multiply constant-weight code: distinct `m x n` words of row weight `w`.
#[derive(Debug, Clone)]
pub struct McwcCode {
    m: u32,
    n: u32,
    w: u32,
    words: Vec<McwcWord>,
    declared_distance: Option<u32>,
}

impl McwcCode {
    pub fn new(m: u32, n: u32, w: u32, words: Vec<McwcWord>, declared_distance: Option<u32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for word in &words {
            if word.m() != m || word.n() != n || word.w() != w {
                return Err(Error::InvalidCode(format!(
                    "word shape {}x{} weight {} does not match code shape {m}x{n} weight {w}",
                    word.m(),
                    word.n(),
                    word.w()
                )));
            }
            if !seen.insert(word.flat()) {
                return Err(Error::InvalidCode("duplicate MCWC word".into()));
            }
        }
        if let Some(d) = declared_distance {
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    let dist = mcwc_distance(&words[i], &words[j])?;
                    if dist < d {
                        return Err(Error::InvalidCode(format!(
                            "declared distance {d} violated: words {i} and {j} are at distance {dist}"
                        )));
                    }
                }
            }
        }
        Ok(McwcCode { m, n, w, words, declared_distance })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn words(&self) -> &[McwcWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn declared_distance(&self) -> Option<u32> {
        self.declared_distance
    }

    pub fn min_distance(&self) -> Result<Option<u32>> {
        let mut min = None;
        for i in 0..self.words.len() {
            for j in i + 1..self.words.len() {
                let d = mcwc_distance(&self.words[i], &self.words[j])?;
                min = Some(min.map_or(d, |m: u32| m.min(d)));
            }
        }
        Ok(min)
    }
}

/// Serialize a pair color `(i, j)` over base palette size `base` to a single
/// color integer.
pub fn pair_color(i: u32, j: u32, base: u32) -> u32 {
    (i - 1) * base + j
}

/// Inverse of [`pair_color`].
pub fn split_pair_color(c: u32, base: u32) -> (u32, u32) {
    ((c - 1) / base + 1, (c - 1) % base + 1)
}

/// A directed edge `(from, to)` carrying a color, with `from != to`.
pub type Edge = (u32, u32, u32);

/// An edge-colored digraph on vertices `1..=vertex_count` with colors
/// `1..=color_count` and no duplicate colored edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    vertex_count: u32,
    color_count: u32,
    edges: BTreeSet<Edge>,
}

impl ColoredDigraph {
    pub fn new(vertex_count: u32, color_count: u32) -> Self {
        ColoredDigraph { vertex_count, color_count, edges: BTreeSet::new() }
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn color_count(&self) -> u32 {
        self.color_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in `(from, to, color)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn add_edge(&mut self, from: u32, to: u32, color: u32) -> Result<()> {
        if from == to {
            return Err(Error::InvalidEdge(format!("loop at vertex {from}")));
        }
        if from == 0 || from > self.vertex_count || to == 0 || to > self.vertex_count {
            return Err(Error::InvalidEdge(format!(
                "edge ({from},{to}) outside vertex range 1..={}",
                self.vertex_count
            )));
        }
        if color == 0 || color > self.color_count {
            return Err(Error::InvalidEdge(format!(
                "color {color} outside range 1..={}",
                self.color_count
            )));
        }
        if !self.edges.insert((from, to, color)) {
            return Err(Error::InvalidEdge(format!("duplicate edge ({from},{to},{color})")));
        }
        Ok(())
    }

    /// Per-color in/out degrees of `u`, laid out `(in_1, out_1, ..., in_r, out_r)`.
    pub fn degree_vector(&self, u: u32) -> Result<DegreeVector> {
        if u == 0 || u > self.vertex_count {
            return Err(Error::UnknownVertex(u));
        }
        let r = self.color_count as usize;
        let mut entries = vec![0u64; 2 * r];
        for &(from, to, color) in &self.edges {
            let c = color as usize - 1;
            if to == u {
                entries[2 * c] += 1;
            }
            if from == u {
                entries[2 * c + 1] += 1;
            }
        }
        Ok(DegreeVector { entries })
    }

    /// Per-color edge counts `(m_1, ..., m_r)`.
    pub fn edge_vector(&self) -> EdgeVector {
        let mut entries = vec![0u64; self.color_count as usize];
        for &(_, _, color) in &self.edges {
            entries[color as usize - 1] += 1;
        }
        EdgeVector { entries }
    }
}

/// Length-`2r` vector `(in_1, out_1, ..., in_r, out_r)` of per-color degrees
/// at one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector {
    entries: Vec<u64>,
}

impl DegreeVector {
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// In-degree with respect to color `c` (1-based).
    pub fn in_degree(&self, c: u32) -> u64 {
        self.entries[2 * (c as usize - 1)]
    }

    /// Out-degree with respect to color `c` (1-based).
    pub fn out_degree(&self, c: u32) -> u64 {
        self.entries[2 * (c as usize - 1) + 1]
    }
}

/// Length-`r` vector of per-color edge counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeVector {
    entries: Vec<u64>,
}

impl EdgeVector {
    pub fn new(entries: Vec<u64>) -> Self {
        EdgeVector { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

/// Parsed contents of a code file: either a q-ary code or an MCWC code.
#[derive(Debug, Clone)]
pub enum CodeFile {
    Qary(Code),
    Mcwc(McwcCode),
}

/// Read a code file.
///
/// The first line is a header, either `q <q> n <n>` or `m <m> n <n> w <w>`;
/// each following line is one codeword as space-separated integers (MCWC
/// words row-major, `m * n` bits). The declared distance is not part of the
/// format and is left unset.
pub fn read_code<R: BufRead>(reader: R) -> Result<CodeFile> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidFile("empty code file".into()))??;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let parse_u32 = |s: &str, what: &str| {
        s.parse::<u32>()
            .map_err(|_| Error::InvalidFile(format!("line 1: bad {what} {s:?}")))
    };
    match toks.as_slice() {
        ["q", q, "n", n] => {
            let (q, n) = (parse_u32(q, "q")?, parse_u32(n, "n")?);
            let mut words = Vec::new();
            for (idx, line) in lines.enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let symbols = parse_int_line(&line, idx + 2)?;
                if symbols.len() != n as usize {
                    return Err(Error::InvalidFile(format!(
                        "line {}: expected {n} symbols, found {}",
                        idx + 2,
                        symbols.len()
                    )));
                }
                words.push(Codeword::new(symbols, q)?);
            }
            Ok(CodeFile::Qary(Code::new(q, n, words, None)?))
        }
        ["m", m, "n", n, "w", w] => {
            let (m, n, w) = (parse_u32(m, "m")?, parse_u32(n, "n")?, parse_u32(w, "w")?);
            let mut words = Vec::new();
            for (idx, line) in lines.enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let bits = parse_int_line(&line, idx + 2)?;
                if bits.len() != (m * n) as usize {
                    return Err(Error::InvalidFile(format!(
                        "line {}: expected {} bits, found {}",
                        idx + 2,
                        m * n,
                        bits.len()
                    )));
                }
                let rows = bits
                    .chunks(n as usize)
                    .map(|row| row.iter().map(|&b| b as u8).collect())
                    .collect();
                words.push(McwcWord::new(rows, w)?);
            }
            Ok(CodeFile::Mcwc(McwcCode::new(m, n, w, words, None)?))
        }
        _ => Err(Error::InvalidFile(format!(
            "line 1: expected `q <q> n <n>` or `m <m> n <n> w <w>`, found {header:?}"
        ))),
    }
}

fn parse_int_line(line: &str, lineno: usize) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::InvalidFile(format!("line {lineno}: bad integer {t:?}")))
        })
        .collect()
}

/// Write a code file in the format accepted by [`read_code`].
pub fn write_code<W: Write>(writer: &mut W, code: &CodeFile) -> Result<()> {
    match code {
        CodeFile::Qary(code) => {
            writeln!(writer, "q {} n {}", code.q(), code.n())?;
            for word in code.codewords() {
                let line: Vec<String> = word.symbols().iter().map(|s| s.to_string()).collect();
                writeln!(writer, "{}", line.join(" "))?;
            }
        }
        CodeFile::Mcwc(code) => {
            writeln!(writer, "m {} n {} w {}", code.m(), code.n(), code.w())?;
            for word in code.words() {
                let line: Vec<String> = word.flat().iter().map(|b| b.to_string()).collect();
                writeln!(writer, "{}", line.join(" "))?;
            }
        }
    }
    Ok(())
}
