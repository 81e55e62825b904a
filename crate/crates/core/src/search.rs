//! Exact-cover search for (superpure) family decompositions of `K_n^(r)`,
//! and an independent verifier for decompositions from any source.
//!
//! Items are the `r * n * (n-1)` colored edges of `K_n^(r)`, ordered by
//! `(color, from, to)`; options are all embeddings ("blocks") of family
//! members into `[n]`. A block of a member with vertex classes
//! `(w_1, ..., w_c)` is an ordered tuple of pairwise-disjoint vertex subsets
//! of those sizes; subsets are unordered internally, which quotients the
//! within-class symmetries of the member exactly once. The solver branches on
//! the uncovered item with the fewest usable options, ties broken by item
//! order, and is deterministic in single-thread mode for a fixed seed.
//!
//! The superpure condition (any two blocks share at most two vertices) is
//! enforced during the search: a candidate with three or more vertices is
//! rejected if it shares three or more vertices with a previously chosen
//! block of that size, looked up through a per-vertex index of chosen blocks.
//! A returned `Unsat` therefore certifies that no (superpure) decomposition
//! exists, by exhaustion of the whole tree.

use std::collections::{BTreeMap, HashMap};
use std::io::{Read, Write};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{DigraphFamily, FamilyMember};
use crate::model::Edge;

// ---------------------------------------------------------------------------
// Blocks and decompositions
// ---------------------------------------------------------------------------

/// How a block embeds its member: one vertex subset per member class, or a
/// bare ordered pair for single-edge members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockShape {
    Classes(Vec<Vec<u32>>),
    Pair(u32, u32),
}

/// One embedded copy of a family member inside `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub member: String,
    pub shape: BlockShape,
}

impl Block {
    /// The class view of the block; a pair `(y, z)` reads as `[[y], [z]]`.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        match &self.shape {
            BlockShape::Classes(classes) => classes.clone(),
            BlockShape::Pair(y, z) => vec![vec![*y], vec![*z]],
        }
    }

    /// All vertices of the block, ascending.
    pub fn vertices(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.classes().into_iter().flatten().collect();
        vs.sort_unstable();
        vs
    }
}

/// An exact partition of the edges of `K_n^(r)` into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub n: u32,
    pub family: String,
    pub superpure: bool,
    pub blocks: Vec<Block>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BlockRepr {
    Pair { member: String, pair: (u32, u32) },
    Classes { member: String, classes: Vec<Vec<u32>> },
}

#[derive(Serialize, Deserialize)]
struct DecompositionRepr {
    n: u32,
    family: String,
    superpure: bool,
    blocks: Vec<BlockRepr>,
}

impl From<&Decomposition> for DecompositionRepr {
    fn from(dec: &Decomposition) -> Self {
        DecompositionRepr {
            n: dec.n,
            family: dec.family.clone(),
            superpure: dec.superpure,
            blocks: dec
                .blocks
                .iter()
                .map(|b| match &b.shape {
                    BlockShape::Pair(y, z) => {
                        BlockRepr::Pair { member: b.member.clone(), pair: (*y, *z) }
                    }
                    BlockShape::Classes(classes) => {
                        BlockRepr::Classes { member: b.member.clone(), classes: classes.clone() }
                    }
                })
                .collect(),
        }
    }
}

/// Write a decomposition file.
pub fn write_decomposition<W: Write>(writer: &mut W, dec: &Decomposition) -> Result<()> {
    serde_json::to_writer_pretty(&mut *writer, &DecompositionRepr::from(dec))?;
    writeln!(writer)?;
    Ok(())
}

/// Write several decompositions as a JSON array (the `--mode all` output).
pub fn write_decompositions<W: Write>(writer: &mut W, decs: &[Decomposition]) -> Result<()> {
    let reprs: Vec<DecompositionRepr> = decs.iter().map(DecompositionRepr::from).collect();
    serde_json::to_writer_pretty(&mut *writer, &reprs)?;
    writeln!(writer)?;
    Ok(())
}

/// Read a decomposition file.
pub fn read_decomposition<R: Read>(reader: R) -> Result<Decomposition> {
    let repr: DecompositionRepr = serde_json::from_reader(reader)?;
    let blocks = repr
        .blocks
        .into_iter()
        .map(|b| match b {
            BlockRepr::Pair { member, pair } => {
                Block { member, shape: BlockShape::Pair(pair.0, pair.1) }
            }
            BlockRepr::Classes { member, classes } => {
                Block { member, shape: BlockShape::Classes(classes) }
            }
        })
        .collect();
    Ok(Decomposition { n: repr.n, family: repr.family, superpure: repr.superpure, blocks })
}

// ---------------------------------------------------------------------------
// Block enumeration
// ---------------------------------------------------------------------------

fn is_single_edge(member: &FamilyMember) -> bool {
    member.graph.vertex_count() == 2 && member.graph.edge_count() == 1
}

/// All blocks of every member of the family inside `[n]`, in member order
/// then lexicographic class order. Members without edges produce no blocks
/// (they cover nothing and could be added to any decomposition arbitrarily
/// often).
pub fn enumerate_blocks(family: &DigraphFamily, n: u32) -> Result<Vec<Block>> {
    let max_verts = family
        .members
        .iter()
        .filter(|m| m.graph.edge_count() > 0)
        .map(|m| m.graph.vertex_count())
        .max()
        .unwrap_or(0);
    if n < max_verts {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is smaller than the largest member ({max_verts} vertices)"
        )));
    }
    let mut blocks = Vec::new();
    for member in &family.members {
        if member.graph.edge_count() == 0 {
            continue;
        }
        let sizes: Vec<usize> = member.classes.iter().map(|c| c.len()).collect();
        let mut chosen: Vec<Vec<u32>> = Vec::with_capacity(sizes.len());
        let mut used = vec![false; n as usize + 1];
        enumerate_classes(n, &sizes, 0, &mut used, &mut chosen, &mut |classes| {
            let shape = if is_single_edge(member) {
                BlockShape::Pair(classes[0][0], classes[1][0])
            } else {
                BlockShape::Classes(classes.to_vec())
            };
            blocks.push(Block { member: member.label.clone(), shape });
        });
    }
    Ok(blocks)
}

fn enumerate_classes(
    n: u32,
    sizes: &[usize],
    idx: usize,
    used: &mut Vec<bool>,
    chosen: &mut Vec<Vec<u32>>,
    emit: &mut impl FnMut(&[Vec<u32>]),
) {
    if idx == sizes.len() {
        emit(chosen);
        return;
    }
    let mut subset = Vec::with_capacity(sizes[idx]);
    pick_subset(n, sizes[idx], 1, used, &mut subset, &mut |s, used| {
        chosen.push(s.to_vec());
        enumerate_classes(n, sizes, idx + 1, used, chosen, emit);
        chosen.pop();
    });
}

fn pick_subset(
    n: u32,
    size: usize,
    from: u32,
    used: &mut Vec<bool>,
    subset: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32], &mut Vec<bool>),
) {
    if subset.len() == size {
        emit(subset, used);
        return;
    }
    let needed = (size - subset.len()) as u32;
    let mut v = from;
    while v + needed - 1 <= n {
        if !used[v as usize] {
            used[v as usize] = true;
            subset.push(v);
            pick_subset(n, size, v + 1, used, subset, emit);
            subset.pop();
            used[v as usize] = false;
        }
        v += 1;
    }
}

// ---------------------------------------------------------------------------
// Exact-cover instance
// ---------------------------------------------------------------------------

fn edge_item(n: u32, (u, v, c): Edge) -> u32 {
    let pair = (u - 1) * (n - 1) + if v < u { v - 1 } else { v - 2 };
    (c - 1) * n * (n - 1) + pair
}

/// Colored edge set of a block: the member's edges pushed through the
/// class-respecting map onto the chosen vertices.
fn block_edges(member: &FamilyMember, block: &Block) -> Result<Vec<Edge>> {
    let classes = block.classes();
    if classes.len() != member.classes.len() {
        return Err(Error::InvalidFile(format!(
            "block of {:?} has {} classes, member has {}",
            member.label,
            classes.len(),
            member.classes.len()
        )));
    }
    let mut map: HashMap<u32, u32> = HashMap::new();
    for (mem_class, tgt_class) in member.classes.iter().zip(&classes) {
        if mem_class.len() != tgt_class.len() {
            return Err(Error::InvalidFile(format!(
                "block of {:?} has a class of size {}, member expects {}",
                member.label,
                tgt_class.len(),
                mem_class.len()
            )));
        }
        let mut mem_sorted = mem_class.clone();
        mem_sorted.sort_unstable();
        let mut tgt_sorted = tgt_class.clone();
        tgt_sorted.sort_unstable();
        for (m, t) in mem_sorted.iter().zip(&tgt_sorted) {
            if map.insert(*m, *t).is_some() {
                return Err(Error::InvalidFile(format!(
                    "member {:?} lists vertex {m} in two classes",
                    member.label
                )));
            }
        }
    }
    member
        .graph
        .edges()
        .map(|(u, v, c)| {
            let fu = *map.get(&u).ok_or_else(|| {
                Error::InvalidFile(format!("member {:?} vertex {u} not in any class", member.label))
            })?;
            let fv = *map.get(&v).ok_or_else(|| {
                Error::InvalidFile(format!("member {:?} vertex {v} not in any class", member.label))
            })?;
            Ok((fu, fv, c))
        })
        .collect()
}

struct OptionEntry {
    block: Block,
    items: Vec<u32>,
    verts: Vec<u32>,
    big: bool,
}

struct Instance {
    n_items: usize,
    options: Vec<OptionEntry>,
    item_options: Vec<Vec<u32>>,
}

fn build_instance(family: &DigraphFamily, n: u32, seed: u64) -> Result<Instance> {
    let blocks = enumerate_blocks(family, n)?;
    let n_items = family.color_count as usize * n as usize * (n as usize - 1);
    let mut options = Vec::with_capacity(blocks.len());
    for block in blocks {
        let member = family
            .member(&block.member)
            .ok_or_else(|| Error::InvalidFile(format!("unknown member {:?}", block.member)))?;
        let mut items: Vec<u32> =
            block_edges(member, &block)?.into_iter().map(|e| edge_item(n, e)).collect();
        items.sort_unstable();
        let verts = block.vertices();
        let big = verts.len() >= 3;
        options.push(OptionEntry { block, items, verts, big });
    }
    let mut item_options = vec![Vec::new(); n_items];
    for (idx, opt) in options.iter().enumerate() {
        for &it in &opt.items {
            item_options[it as usize].push(idx as u32);
        }
    }
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut priority: Vec<u64> = (0..options.len() as u64).collect();
        priority.shuffle(&mut rng);
        for list in &mut item_options {
            list.sort_by_key(|&o| (priority[o as usize], o));
        }
    }
    Ok(Instance { n_items, options, item_options })
}

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    All,
    Count,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub superpure: bool,
    pub mode: SearchMode,
    pub seed: u64,
    pub time_limit: Option<Duration>,
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            superpure: false,
            mode: SearchMode::First,
            seed: 0,
            time_limit: None,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Sat,
    Unsat,
    Timeout,
}

#[derive(Debug)]
pub struct SearchReport {
    pub status: SearchStatus,
    pub solutions: Vec<Decomposition>,
    /// Number of solutions found (all of them in `All`/`Count` mode).
    pub count: u64,
    pub nodes: u64,
    /// Deepest partial cover reached, in blocks.
    pub best_depth: usize,
    pub elapsed: Duration,
}

struct Searcher<'a> {
    inst: &'a Instance,
    superpure: bool,
    mode: SearchMode,
    covered: Vec<bool>,
    blocked: Vec<u32>,
    num_covered: usize,
    chosen: Vec<u32>,
    /// 1-based vertex -> chosen big-option ids, for the superpure check.
    vert_big: Vec<Vec<u32>>,
    nodes: u64,
    best_depth: usize,
    found: u64,
    solutions: Vec<Vec<u32>>,
    deadline: Option<Instant>,
    timed_out: bool,
    stop_flag: Option<&'a AtomicBool>,
}

impl<'a> Searcher<'a> {
    fn new(
        inst: &'a Instance,
        n: u32,
        config: &SearchConfig,
        deadline: Option<Instant>,
        stop_flag: Option<&'a AtomicBool>,
    ) -> Self {
        Searcher {
            inst,
            superpure: config.superpure,
            mode: config.mode,
            covered: vec![false; inst.n_items],
            blocked: vec![0; inst.options.len()],
            num_covered: 0,
            chosen: Vec::new(),
            vert_big: vec![Vec::new(); n as usize + 1],
            nodes: 0,
            best_depth: 0,
            found: 0,
            solutions: Vec::new(),
            deadline,
            timed_out: false,
            stop_flag,
        }
    }

    fn violates_superpure(&self, opt: u32) -> bool {
        let entry = &self.inst.options[opt as usize];
        // Count how often each chosen big block appears among this
        // candidate's vertices; three shared vertices is a violation.
        let mut counts: Vec<(u32, u32)> = Vec::new();
        for &v in &entry.verts {
            for &b in &self.vert_big[v as usize] {
                match counts.iter_mut().find(|(id, _)| *id == b) {
                    Some((_, c)) => {
                        *c += 1;
                        if *c >= 3 {
                            return true;
                        }
                    }
                    None => counts.push((b, 1)),
                }
            }
        }
        false
    }

    fn choose(&mut self, opt: u32) {
        self.chosen.push(opt);
        let entry = &self.inst.options[opt as usize];
        for &it in &entry.items {
            debug_assert!(!self.covered[it as usize]);
            self.covered[it as usize] = true;
            self.num_covered += 1;
            for &p in &self.inst.item_options[it as usize] {
                self.blocked[p as usize] += 1;
            }
        }
        if self.superpure && entry.big {
            for &v in &entry.verts {
                self.vert_big[v as usize].push(opt);
            }
        }
        self.best_depth = self.best_depth.max(self.chosen.len());
    }

    fn unchoose(&mut self, opt: u32) {
        let entry = &self.inst.options[opt as usize];
        if self.superpure && entry.big {
            for &v in &entry.verts {
                let list = &mut self.vert_big[v as usize];
                debug_assert_eq!(list.last(), Some(&opt));
                list.pop();
            }
        }
        for &it in &entry.items {
            self.covered[it as usize] = false;
            self.num_covered -= 1;
            for &p in &self.inst.item_options[it as usize] {
                self.blocked[p as usize] -= 1;
            }
        }
        self.chosen.pop();
    }

    fn record_solution(&mut self) -> bool {
        self.found += 1;
        match self.mode {
            SearchMode::First | SearchMode::All => {
                let mut sol = self.chosen.clone();
                sol.sort_unstable();
                self.solutions.push(sol);
                self.mode == SearchMode::First
            }
            SearchMode::Count => false,
        }
    }

    /// Returns true when the search should stop unwinding (first solution
    /// found, timeout, or external stop).
    fn search(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                    return true;
                }
            }
            if let Some(flag) = self.stop_flag {
                if flag.load(Ordering::Relaxed) {
                    return true;
                }
            }
        }
        if self.num_covered == self.inst.n_items {
            return self.record_solution();
        }
        // Most-constrained item, ties broken by item order.
        let mut best_item = usize::MAX;
        let mut best_avail = u32::MAX;
        for it in 0..self.inst.n_items {
            if self.covered[it] {
                continue;
            }
            let avail = self.inst.item_options[it]
                .iter()
                .filter(|&&o| self.blocked[o as usize] == 0)
                .count() as u32;
            if avail < best_avail {
                best_avail = avail;
                best_item = it;
                if avail == 0 {
                    break;
                }
            }
        }
        if best_avail == 0 {
            return false;
        }
        let candidates = self.inst.item_options[best_item].clone();
        for opt in candidates {
            if self.blocked[opt as usize] != 0 {
                continue;
            }
            if self.superpure
                && self.inst.options[opt as usize].big
                && self.violates_superpure(opt)
            {
                continue;
            }
            self.choose(opt);
            let stop = self.search();
            self.unchoose(opt);
            if stop {
                return true;
            }
        }
        false
    }
}

fn solution_to_decomposition(
    inst: &Instance,
    family: &DigraphFamily,
    n: u32,
    superpure: bool,
    chosen: &[u32],
) -> Decomposition {
    Decomposition {
        n,
        family: family.name.clone(),
        superpure,
        blocks: chosen.iter().map(|&o| inst.options[o as usize].block.clone()).collect(),
    }
}

struct RawOutcome {
    solutions: Vec<Vec<u32>>,
    count: u64,
    nodes: u64,
    best_depth: usize,
    timed_out: bool,
}

/// Search for decompositions of `K_n^(r)` into blocks of `family`.
///
/// `Unsat` certifies exhaustion of the search tree. Single-thread runs are
/// deterministic for fixed `(family, n, seed)`; multi-threaded `First` runs
/// may return a different valid solution.
pub fn solve(family: &DigraphFamily, n: u32, config: &SearchConfig) -> Result<SearchReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} < 2")));
    }
    let start = Instant::now();
    let inst = build_instance(family, n, config.seed)?;
    let deadline = config.time_limit.map(|limit| start + limit);

    let raw = if config.threads <= 1 {
        let mut searcher = Searcher::new(&inst, n, config, deadline, None);
        searcher.search();
        RawOutcome {
            solutions: searcher.solutions,
            count: searcher.found,
            nodes: searcher.nodes,
            best_depth: searcher.best_depth,
            timed_out: searcher.timed_out,
        }
    } else {
        solve_parallel(&inst, n, config, deadline)
    };

    let status = match config.mode {
        SearchMode::First => {
            if raw.count > 0 {
                SearchStatus::Sat
            } else if raw.timed_out {
                SearchStatus::Timeout
            } else {
                SearchStatus::Unsat
            }
        }
        // For exhaustive modes a timeout means the census is incomplete.
        SearchMode::All | SearchMode::Count => {
            if raw.timed_out {
                SearchStatus::Timeout
            } else if raw.count > 0 {
                SearchStatus::Sat
            } else {
                SearchStatus::Unsat
            }
        }
    };
    Ok(SearchReport {
        status,
        solutions: raw
            .solutions
            .iter()
            .map(|sol| solution_to_decomposition(&inst, family, n, config.superpure, sol))
            .collect(),
        count: raw.count,
        nodes: raw.nodes,
        best_depth: raw.best_depth,
        elapsed: start.elapsed(),
    })
}

fn solve_parallel(
    inst: &Instance,
    n: u32,
    config: &SearchConfig,
    deadline: Option<Instant>,
) -> RawOutcome {
    // Branch once at the root on the globally most-constrained item, then
    // distribute the branches over a scoped pool.
    let mut best_item = usize::MAX;
    let mut best_avail = usize::MAX;
    for it in 0..inst.n_items {
        let avail = inst.item_options[it].len();
        if avail < best_avail {
            best_avail = avail;
            best_item = it;
        }
    }
    if inst.n_items == 0 || best_avail == 0 {
        let mut searcher = Searcher::new(inst, n, config, deadline, None);
        searcher.search();
        return RawOutcome {
            solutions: searcher.solutions,
            count: searcher.found,
            nodes: searcher.nodes,
            best_depth: searcher.best_depth,
            timed_out: searcher.timed_out,
        };
    }

    let branches: Vec<u32> = inst.item_options[best_item].clone();
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let results: Mutex<Vec<RawOutcome>> = Mutex::new(Vec::new());

    std::thread::scope(|scope| {
        for _ in 0..config.threads {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::SeqCst);
                if idx >= branches.len() || stop.load(Ordering::Relaxed) {
                    break;
                }
                let opt = branches[idx];
                let mut searcher = Searcher::new(inst, n, config, deadline, Some(&stop));
                searcher.choose(opt);
                searcher.search();
                searcher.unchoose(opt);
                if searcher.found > 0 && config.mode == SearchMode::First {
                    stop.store(true, Ordering::SeqCst);
                }
                results.lock().unwrap().push(RawOutcome {
                    solutions: searcher.solutions,
                    count: searcher.found,
                    nodes: searcher.nodes,
                    best_depth: searcher.best_depth,
                    timed_out: searcher.timed_out,
                });
            });
        }
    });

    let mut out = RawOutcome {
        solutions: Vec::new(),
        count: 0,
        nodes: 0,
        best_depth: 0,
        timed_out: false,
    };
    for part in results.into_inner().unwrap() {
        out.solutions.extend(part.solutions);
        out.count += part.count;
        out.nodes += part.nodes;
        out.best_depth = out.best_depth.max(part.best_depth);
        out.timed_out |= part.timed_out;
    }
    if config.mode == SearchMode::First && out.count > 1 {
        out.solutions.truncate(1);
        out.count = 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Independent verification
// ---------------------------------------------------------------------------

/// Result of re-checking a decomposition from scratch.
#[derive(Debug, Clone)]
pub struct DecompositionCheck {
    pub ok: bool,
    /// Outcome of the pairwise vertex-intersection bound; only checked when
    /// the decomposition is flagged superpure.
    pub superpure_ok: Option<bool>,
    pub violations: Vec<String>,
    pub member_counts: BTreeMap<String, u64>,
}

const MAX_REPORTED_VIOLATIONS: usize = 20;

/// Re-expand every block of `dec` and check the exact-cover property and, if
/// flagged, the superpure bound. Independent of the solver: blocks are
/// expanded through a freshly built vertex assignment and compared against
/// the full edge set of `K_n^(r)` by direct enumeration.
pub fn verify_decomposition(
    family: &DigraphFamily,
    dec: &Decomposition,
) -> Result<DecompositionCheck> {
    let mut violations = Vec::new();
    let mut member_counts: BTreeMap<String, u64> = BTreeMap::new();
    if dec.family != family.name {
        violations.push(format!(
            "decomposition references family {:?}, given {:?}",
            dec.family, family.name
        ));
    }
    let n = dec.n;
    let r = family.color_count;
    let mut coverage: HashMap<Edge, u32> = HashMap::new();
    for (bidx, block) in dec.blocks.iter().enumerate() {
        let Some(member) = family.member(&block.member) else {
            violations.push(format!("block {bidx}: unknown member {:?}", block.member));
            continue;
        };
        *member_counts.entry(block.member.clone()).or_insert(0) += 1;
        let classes = block.classes();
        let mut seen = std::collections::BTreeSet::new();
        let mut shape_ok = true;
        for (ci, class) in classes.iter().enumerate() {
            for &v in class {
                if v == 0 || v > n {
                    violations.push(format!("block {bidx}: vertex {v} outside [1,{n}]"));
                    shape_ok = false;
                }
                if !seen.insert(v) {
                    violations
                        .push(format!("block {bidx}: vertex {v} repeated (class {})", ci + 1));
                    shape_ok = false;
                }
            }
        }
        if !shape_ok {
            continue;
        }
        match block_edges(member, block) {
            Ok(edges) => {
                for e in edges {
                    *coverage.entry(e).or_insert(0) += 1;
                }
            }
            Err(e) => violations.push(format!("block {bidx}: {e}")),
        }
        if violations.len() > MAX_REPORTED_VIOLATIONS {
            break;
        }
    }

    if violations.is_empty() {
        'cover: for c in 1..=r {
            for u in 1..=n {
                for v in 1..=n {
                    if u == v {
                        continue;
                    }
                    match coverage.remove(&(u, v, c)) {
                        None => violations.push(format!("edge ({u},{v}) color {c} uncovered")),
                        Some(1) => {}
                        Some(k) => {
                            violations.push(format!("edge ({u},{v}) color {c} covered {k} times"))
                        }
                    }
                    if violations.len() > MAX_REPORTED_VIOLATIONS {
                        break 'cover;
                    }
                }
            }
        }
        for ((u, v, c), _) in coverage {
            violations.push(format!("edge ({u},{v}) color {c} outside K_{n}^({r})"));
            if violations.len() > MAX_REPORTED_VIOLATIONS {
                break;
            }
        }
    }

    let superpure_ok = if dec.superpure {
        let verts: Vec<Vec<u32>> = dec.blocks.iter().map(|b| b.vertices()).collect();
        let mut ok = true;
        'pairs: for i in 0..verts.len() {
            if verts[i].len() < 3 {
                continue;
            }
            for j in i + 1..verts.len() {
                if verts[j].len() < 3 {
                    continue;
                }
                let inter = sorted_intersection_size(&verts[i], &verts[j]);
                if inter > 2 {
                    violations.push(format!(
                        "blocks {i} and {j} share {inter} vertices (superpure allows 2)"
                    ));
                    ok = false;
                    if violations.len() > MAX_REPORTED_VIOLATIONS {
                        break 'pairs;
                    }
                }
            }
        }
        Some(ok)
    } else {
        None
    };

    Ok(DecompositionCheck {
        ok: violations.is_empty(),
        superpure_ok,
        violations,
        member_counts,
    })
}

fn sorted_intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
