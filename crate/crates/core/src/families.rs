//! Generators for the digraph families whose decompositions of `K_n^(r)`
//! yield codes, and the JSON family-file format.
//!
//! Five generators are provided:
//!
//! * `G(w̄)` with its single-edge companions — codes of distance `2w-2` and
//!   constant composition;
//! * `G*(w̄)` over pair colors — distance `2w-3`, constant composition;
//! * the unions of these over all compositions of a given weight — constant
//!   weight codes at the two distances;
//! * `H*(m,w)` with diagonal single edges — multiply constant-weight codes.
//!
//! Every member carries an ordered list of vertex classes. Within a class the
//! member graph is symmetric under all vertex permutations, so an embedding of
//! the member into `[n]` is determined by choosing one vertex subset per
//! class. Class order is meaningful: position `i` becomes symbol `i` (or row
//! `i`) when a decomposition is turned into a code.

use std::collections::BTreeSet;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{pair_color, ColoredDigraph, Composition};

/// One member of a family: a labeled edge-colored digraph with its ordered
/// vertex classes. `main` marks the codeword-producing members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub label: String,
    pub main: bool,
    pub graph: ColoredDigraph,
    /// Ordered vertex classes; may contain empty classes so that position
    /// matches symbol value for generalized compositions.
    pub classes: Vec<Vec<u32>>,
}

/// A named list of edge-colored digraphs sharing one color set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphFamily {
    pub name: String,
    pub color_count: u32,
    /// Generator parameters, for human consumption.
    pub params: Option<String>,
    pub members: Vec<FamilyMember>,
}

impl DigraphFamily {
    pub fn member(&self, label: &str) -> Option<&FamilyMember> {
        self.members.iter().find(|m| m.label == label)
    }

    pub fn main_members(&self) -> impl Iterator<Item = &FamilyMember> {
        self.members.iter().filter(|m| m.main)
    }
}

/// Vertex ids `1..=w` grouped into consecutive classes of the given sizes;
/// zero parts yield empty classes.
fn class_layout(composition: &Composition) -> Vec<Vec<u32>> {
    let mut classes = Vec::with_capacity(composition.parts().len());
    let mut next = 1u32;
    for &part in composition.parts() {
        classes.push((next..next + part).collect());
        next += part;
    }
    classes
}

fn class_of_vertex(classes: &[Vec<u32>], v: u32) -> u32 {
    for (i, class) in classes.iter().enumerate() {
        if class.contains(&v) {
            return i as u32 + 1;
        }
    }
    unreachable!("vertex {v} not in any class");
}

fn check_buildable(composition: &Composition) -> Result<()> {
    if composition.weight() == 0 {
        return Err(Error::InvalidComposition("weight 0: nothing to build".into()));
    }
    Ok(())
}

/// The digraph `G(w̄)`: one vertex class per part; every ordered pair of
/// distinct vertices carries one edge, colored by the class of its source.
pub fn build_g(composition: &Composition) -> Result<ColoredDigraph> {
    check_buildable(composition)?;
    let classes = class_layout(composition);
    let w = composition.weight();
    let mut g = ColoredDigraph::new(w, composition.q() - 1);
    for u in 1..=w {
        let cu = class_of_vertex(&classes, u);
        for v in 1..=w {
            if u != v {
                g.add_edge(u, v, cu)?;
            }
        }
    }
    Ok(g)
}

/// The digraph `G*(w̄)`: same vertex set as `G(w̄)`, but the edge from class
/// `i` to class `j` is colored by the pair `(i, j)`.
pub fn build_gstar(composition: &Composition) -> Result<ColoredDigraph> {
    check_buildable(composition)?;
    let classes = class_layout(composition);
    let base = composition.q() - 1;
    let w = composition.weight();
    let mut g = ColoredDigraph::new(w, base * base);
    for u in 1..=w {
        let cu = class_of_vertex(&classes, u);
        for v in 1..=w {
            if u != v {
                let cv = class_of_vertex(&classes, v);
                g.add_edge(u, v, pair_color(cu, cv, base))?;
            }
        }
    }
    Ok(g)
}

/// Two vertices joined by one directed edge of the given color.
pub fn build_single_edge(color: u32, color_count: u32) -> Result<ColoredDigraph> {
    let mut g = ColoredDigraph::new(2, color_count);
    g.add_edge(1, 2, color)?;
    Ok(g)
}

fn single_member(label: String, color: u32, color_count: u32) -> Result<FamilyMember> {
    Ok(FamilyMember {
        label,
        main: false,
        graph: build_single_edge(color, color_count)?,
        classes: vec![vec![1], vec![2]],
    })
}

/// The family `{G(w̄)} ∪ {G_i : s+1 <= i <= q-1}` where `s` is the largest
/// index with `w_1 = ... = w_s`.
pub fn family_g(composition: &Composition) -> Result<DigraphFamily> {
    composition.require_monotone()?;
    let parts = composition.parts();
    let q1 = composition.q() - 1;
    let s = parts.iter().take_while(|&&p| p == parts[0]).count() as u32;
    let mut members = vec![FamilyMember {
        label: format!("G{composition}"),
        main: true,
        graph: build_g(composition)?,
        classes: class_layout(composition),
    }];
    for i in s + 1..=q1 {
        members.push(single_member(format!("G{i}"), i, q1)?);
    }
    Ok(DigraphFamily {
        name: format!("G{composition}"),
        color_count: q1,
        params: Some(format!("composition={composition}")),
        members,
    })
}

/// The family `{G*(w̄)} ∪ {G*_ij : (i,j) not excluded}`.
///
/// When `w_1 > w_2` the excluded pairs are `(1,1)` together with `(1,j)` and
/// `(j,1)` for `2 <= j <= r`, `r` the largest index with
/// `w_2 = ... = w_r = w_1 - 1`. When `w_1 = w_2` the excluded pairs are the
/// ordered distinct pairs over `[r]`, `r` the largest index with
/// `w_1 = ... = w_r`; diagonal pairs keep their single edges.
pub fn family_gstar(composition: &Composition) -> Result<DigraphFamily> {
    composition.require_monotone()?;
    if composition.weight() < 2 {
        return Err(Error::InvalidComposition("weight < 2: G* needs at least one edge".into()));
    }
    let parts = composition.parts();
    let q1 = composition.q() - 1;
    let w1 = parts[0];
    let w2 = parts.get(1).copied().unwrap_or(0);
    let mut excluded = BTreeSet::new();
    if w1 > w2 {
        excluded.insert((1, 1));
        let r = 1 + parts[1..].iter().take_while(|&&p| p == w1 - 1).count() as u32;
        for j in 2..=r {
            excluded.insert((1, j));
            excluded.insert((j, 1));
        }
    } else {
        let r = parts.iter().take_while(|&&p| p == w1).count() as u32;
        for i in 1..=r {
            for j in 1..=r {
                if i != j {
                    excluded.insert((i, j));
                }
            }
        }
    }
    let mut members = vec![FamilyMember {
        label: format!("G*{composition}"),
        main: true,
        graph: build_gstar(composition)?,
        classes: class_layout(composition),
    }];
    for i in 1..=q1 {
        for j in 1..=q1 {
            if !excluded.contains(&(i, j)) {
                members.push(single_member(
                    format!("G*({i},{j})"),
                    pair_color(i, j, q1),
                    q1 * q1,
                )?);
            }
        }
    }
    Ok(DigraphFamily {
        name: format!("G*{composition}"),
        color_count: q1 * q1,
        params: Some(format!("composition={composition}")),
        members,
    })
}

/// All length `q-1` tuples of nonnegative integers summing to `w`, first part
/// descending. Neither positivity nor monotonicity is required of the
/// members.
pub fn composition_set_w(q: u32, w: u32) -> Result<Vec<Composition>> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("alphabet size {q} < 2")));
    }
    if w == 0 {
        return Err(Error::InvalidParameter("weight 0".into()));
    }
    let slots = (q - 1) as usize;
    let mut out = Vec::new();
    let mut current = vec![0u32; slots];
    fn rec(current: &mut Vec<u32>, idx: usize, remaining: u32, out: &mut Vec<Composition>) {
        if idx + 1 == current.len() {
            current[idx] = remaining;
            out.push(Composition::new(current.clone()).unwrap());
            return;
        }
        for v in (0..=remaining).rev() {
            current[idx] = v;
            rec(current, idx + 1, remaining - v, out);
        }
    }
    rec(&mut current, 0, w, &mut out);
    Ok(out)
}

/// The family `{G(w̄) : w̄ in W}` over all compositions of weight `w`; every
/// member is main and there are no single-edge members.
pub fn family_g_cwc(q: u32, w: u32) -> Result<DigraphFamily> {
    if w < 2 {
        return Err(Error::InvalidParameter(format!("weight {w} < 2")));
    }
    let members = composition_set_w(q, w)?
        .iter()
        .map(|comp| {
            Ok(FamilyMember {
                label: format!("G{comp}"),
                main: true,
                graph: build_g(comp)?,
                classes: class_layout(comp),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DigraphFamily {
        name: format!("G(q={q},w={w})"),
        color_count: q - 1,
        params: Some(format!("q={q} w={w}")),
        members,
    })
}

/// The family `{G*(w̄) : w̄ in W}`, the pair-colored counterpart of
/// [`family_g_cwc`].
pub fn family_gstar_cwc(q: u32, w: u32) -> Result<DigraphFamily> {
    if w < 2 {
        return Err(Error::InvalidParameter(format!("weight {w} < 2")));
    }
    let members = composition_set_w(q, w)?
        .iter()
        .map(|comp| {
            Ok(FamilyMember {
                label: format!("G*{comp}"),
                main: true,
                graph: build_gstar(comp)?,
                classes: class_layout(comp),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DigraphFamily {
        name: format!("G*(q={q},w={w})"),
        color_count: (q - 1) * (q - 1),
        params: Some(format!("q={q} w={w}")),
        members,
    })
}

/// The family `{H*(m,w)} ∪ {G*_ii : i in [m]}` where `H*(m,w)` is `G*` of the
/// all-`w` composition with `m` parts.
pub fn family_hstar(m: u32, w: u32) -> Result<DigraphFamily> {
    if m == 0 || w == 0 {
        return Err(Error::InvalidParameter(format!("need m >= 1 and w >= 1, got m={m}, w={w}")));
    }
    let comp = Composition::new(vec![w; m as usize])?;
    let mut members = vec![FamilyMember {
        label: format!("H*({m},{w})"),
        main: true,
        graph: if comp.weight() == 1 {
            // Single vertex, no edges: built directly since build_gstar
            // rejects nothing here.
            ColoredDigraph::new(1, m * m)
        } else {
            build_gstar(&comp)?
        },
        classes: class_layout(&comp),
    }];
    for i in 1..=m {
        members.push(single_member(format!("G*({i},{i})"), pair_color(i, i, m), m * m)?);
    }
    Ok(DigraphFamily {
        name: format!("H*({m},{w})"),
        color_count: m * m,
        params: Some(format!("m={m} w={w}")),
        members,
    })
}

/// Group the vertices of `g` into interchangeability classes: `u` and `v`
/// share a class when swapping them is an automorphism of `g`. Classes are
/// ordered by the smallest out-edge color of their vertices (vertices with no
/// out-edges last), then by smallest vertex id.
///
/// Used as a fallback when a family file does not record classes explicitly.
/// If the swap relation is not transitive on some candidate class, the
/// affected vertices fall back to singleton classes, which is always sound
/// for embedding enumeration (it merely enumerates more candidates).
pub fn derive_classes(g: &ColoredDigraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let edges: BTreeSet<_> = g.edges().collect();
    let swap_ok = |a: u32, b: u32| {
        let sigma = |x: u32| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        edges.iter().all(|&(u, v, c)| edges.contains(&(sigma(u), sigma(v), c)))
    };

    // Union-find over vertices 0..n.
    let mut parent: Vec<usize> = (0..n as usize).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if swap_ok(a, b) {
                let (ra, rb) = (find(&mut parent, a as usize - 1), find(&mut parent, b as usize - 1));
                parent[ra] = rb;
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<u32>> = std::collections::BTreeMap::new();
    for v in 1..=n {
        let root = find(&mut parent, v as usize - 1);
        by_root.entry(root).or_default().push(v);
    }
    let groups: Vec<Vec<u32>> = by_root.into_values().collect();
    // Validate transitivity; over-merged groups decay to singletons.
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for grp in groups {
        let all_ok = grp
            .iter()
            .enumerate()
            .all(|(i, &a)| grp[i + 1..].iter().all(|&b| swap_ok(a, b)));
        if all_ok {
            classes.push(grp);
        } else {
            classes.extend(grp.into_iter().map(|v| vec![v]));
        }
    }
    let min_out_color = |class: &Vec<u32>| {
        g.edges()
            .filter(|(u, _, _)| class.contains(u))
            .map(|(_, _, c)| c)
            .min()
    };
    classes.sort_by_key(|class| {
        let key = min_out_color(class);
        (key.is_none(), key, *class.iter().min().unwrap())
    });
    classes
}

#[derive(Serialize, Deserialize)]
struct MemberFile {
    label: String,
    main: bool,
    vertices: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<Vec<u32>>>,
    edges: Vec<(u32, u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct FamilyFile {
    name: String,
    colors: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<String>,
    members: Vec<MemberFile>,
}

/// Write the family-file JSON representation.
pub fn write_family<W: Write>(writer: &mut W, family: &DigraphFamily) -> Result<()> {
    let file = FamilyFile {
        name: family.name.clone(),
        colors: family.color_count,
        params: family.params.clone(),
        members: family
            .members
            .iter()
            .map(|m| MemberFile {
                label: m.label.clone(),
                main: m.main,
                vertices: m.graph.vertex_count(),
                classes: Some(m.classes.clone()),
                edges: m.graph.edges().collect(),
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut *writer, &file)?;
    writeln!(writer)?;
    Ok(())
}

/// Read and validate a family file. Files written by other tools may omit
/// the per-member classes; they are then derived from the graph structure.
pub fn read_family<R: Read>(reader: R) -> Result<DigraphFamily> {
    let file: FamilyFile = serde_json::from_reader(reader)?;
    if file.colors == 0 {
        return Err(Error::InvalidFile("family has zero colors".into()));
    }
    if file.members.is_empty() {
        return Err(Error::InvalidFile("family has no members".into()));
    }
    let mut labels = BTreeSet::new();
    let mut members = Vec::with_capacity(file.members.len());
    for m in file.members {
        if !labels.insert(m.label.clone()) {
            return Err(Error::InvalidFile(format!("duplicate member label {:?}", m.label)));
        }
        let mut graph = ColoredDigraph::new(m.vertices, file.colors);
        for (u, v, c) in m.edges {
            graph
                .add_edge(u, v, c)
                .map_err(|e| Error::InvalidFile(format!("member {:?}: {e}", m.label)))?;
        }
        let classes = match m.classes {
            Some(classes) => {
                let mut seen = BTreeSet::new();
                for class in &classes {
                    for &v in class {
                        if v == 0 || v > m.vertices {
                            return Err(Error::InvalidFile(format!(
                                "member {:?}: class vertex {v} out of range",
                                m.label
                            )));
                        }
                        if !seen.insert(v) {
                            return Err(Error::InvalidFile(format!(
                                "member {:?}: vertex {v} in two classes",
                                m.label
                            )));
                        }
                    }
                }
                if seen.len() != m.vertices as usize {
                    return Err(Error::InvalidFile(format!(
                        "member {:?}: classes cover {} of {} vertices",
                        m.label,
                        seen.len(),
                        m.vertices
                    )));
                }
                classes
            }
            None => derive_classes(&graph),
        };
        members.push(FamilyMember { label: m.label, main: m.main, graph, classes });
    }
    Ok(DigraphFamily { name: file.name, color_count: file.colors, params: file.params, members })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn g_of_32_matches_example() {
        let g = build_g(&comp(&[3, 2])).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_vector().entries(), &[12, 8]);
        assert_eq!(g.edge_count(), 20);
    }

    #[test]
    fn g_single_class_is_complete_digraph() {
        let g = build_g(&comp(&[4])).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_vector().entries(), &[12]);
    }

    #[test]
    fn g_of_21_counts() {
        let g = build_g(&comp(&[2, 1])).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.edge_vector().entries(), &[4, 2]);
    }

    #[test]
    fn single_edge_vectors() {
        assert_eq!(build_single_edge(2, 2).unwrap().edge_vector().entries(), &[0, 1]);
        assert_eq!(build_single_edge(1, 1).unwrap().edge_vector().entries(), &[1]);
        let c = pair_color(2, 2, 2);
        assert_eq!(build_single_edge(c, 4).unwrap().edge_vector().entries(), &[0, 0, 0, 1]);
        assert!(build_single_edge(3, 2).is_err());
    }

    #[test]
    fn family_g_members() {
        let f = family_g(&comp(&[2, 1])).unwrap();
        let labels: Vec<&str> = f.members.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["G[2,1]", "G2"]);
        assert!(f.members[0].main && !f.members[1].main);

        let f = family_g(&comp(&[2, 2])).unwrap();
        assert_eq!(f.members.len(), 1);

        let f = family_g(&comp(&[3, 1, 1])).unwrap();
        let labels: Vec<&str> = f.members.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["G[3,1,1]", "G2", "G3"]);

        assert!(family_g(&comp(&[1, 2])).is_err());
    }

    #[test]
    fn gstar_edge_counts() {
        let g = build_gstar(&comp(&[2, 2])).unwrap();
        assert_eq!(g.edge_vector().entries(), &[2, 4, 4, 2]);
        let g = build_gstar(&comp(&[3])).unwrap();
        assert_eq!(g.edge_vector().entries(), &[6]);
        let g = build_gstar(&comp(&[3, 2])).unwrap();
        assert_eq!(g.edge_vector().entries(), &[6, 6, 6, 2]);
        assert_eq!(g.edge_count(), 20);
    }

    #[test]
    fn gstar_forgets_to_g() {
        // Dropping the second pair coordinate of each G* color recovers G
        // edge-for-edge.
        for parts in [vec![2, 1], vec![3, 2], vec![2, 2, 1], vec![4]] {
            let c = comp(&parts);
            let g = build_g(&c).unwrap();
            let gs = build_gstar(&c).unwrap();
            let base = c.q() - 1;
            let forgotten: BTreeSet<_> = gs
                .edges()
                .map(|(u, v, col)| {
                    let (i, _) = crate::model::split_pair_color(col, base);
                    (u, v, i)
                })
                .collect();
            let original: BTreeSet<_> = g.edges().collect();
            assert_eq!(forgotten, original, "composition {c}");
        }
    }

    #[test]
    fn family_gstar_members() {
        let f = family_gstar(&comp(&[3, 2])).unwrap();
        let labels: Vec<&str> = f.members.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["G*[3,2]", "G*(2,2)"]);

        let f = family_gstar(&comp(&[2, 2])).unwrap();
        let labels: Vec<&str> = f.members.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["G*[2,2]", "G*(1,1)", "G*(2,2)"]);

        let f = family_gstar(&comp(&[3, 1])).unwrap();
        let labels: Vec<&str> = f.members.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["G*[3,1]", "G*(1,2)", "G*(2,1)", "G*(2,2)"]);
    }

    #[test]
    fn composition_set_enumeration() {
        let w32 = composition_set_w(3, 2).unwrap();
        let parts: Vec<&[u32]> = w32.iter().map(|c| c.parts()).collect();
        assert_eq!(parts, [&[2, 0][..], &[1, 1], &[0, 2]]);
        assert_eq!(composition_set_w(2, 5).unwrap().len(), 1);
        assert_eq!(composition_set_w(3, 3).unwrap().len(), 4);
        // Stars and bars: C(w+q-2, q-2).
        assert_eq!(composition_set_w(4, 4).unwrap().len(), 15);
    }

    #[test]
    fn cwc_families() {
        assert_eq!(family_g_cwc(3, 2).unwrap().members.len(), 3);
        assert_eq!(family_g_cwc(2, 4).unwrap().members.len(), 1);
        let f = family_gstar_cwc(3, 3).unwrap();
        assert_eq!(f.members.len(), 4);
        assert_eq!(f.color_count, 4);
        assert!(f.members.iter().all(|m| m.main));
    }

    #[test]
    fn hstar_families() {
        let f = family_hstar(2, 1).unwrap();
        let labels: Vec<&str> = f.members.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(labels, ["H*(2,1)", "G*(1,1)", "G*(2,2)"]);
        let h = &f.members[0].graph;
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_vector().entries(), &[0, 1, 1, 0]);

        let f = family_hstar(1, 3).unwrap();
        assert_eq!(f.members.len(), 2);
        assert_eq!(f.members[0].graph.edge_vector().entries(), &[6]);

        let f = family_hstar(2, 2).unwrap();
        assert_eq!(f.members[0].graph.edge_vector().entries(), &[2, 4, 4, 2]);
    }

    #[test]
    fn degree_vectors_match_closed_forms() {
        // G(w̄): at a class-i vertex, in_i = w_i - 1, out_i = w - 1,
        // in_j = w_j and out_j = 0 for j != i.
        for parts in [vec![2, 1], vec![3, 2], vec![2, 2], vec![3, 1, 1], vec![4]] {
            let c = comp(&parts);
            let g = build_g(&c).unwrap();
            let classes = class_layout(&c);
            let w = c.weight() as u64;
            for (i, class) in classes.iter().enumerate() {
                for &v in class {
                    let dv = g.degree_vector(v).unwrap();
                    for (j, &wj) in c.parts().iter().enumerate() {
                        let (want_in, want_out) = if i == j {
                            (u64::from(wj) - 1, w - 1)
                        } else {
                            (u64::from(wj), 0)
                        };
                        assert_eq!(dv.in_degree(j as u32 + 1), want_in, "{c} v{v} in{}", j + 1);
                        assert_eq!(dv.out_degree(j as u32 + 1), want_out, "{c} v{v} out{}", j + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn gstar_degree_vectors_match_closed_forms() {
        // G*(w̄): in_(i,i) = out_(i,i) = w_i - 1; in_(j,i) = out_(i,j) = w_j.
        for parts in [vec![3, 2], vec![2, 2], vec![3, 1], vec![2, 2, 1]] {
            let c = comp(&parts);
            let g = build_gstar(&c).unwrap();
            let classes = class_layout(&c);
            let base = c.q() - 1;
            for (idx, class) in classes.iter().enumerate() {
                let i = idx as u32 + 1;
                let wi = u64::from(c.parts()[idx]);
                for &v in class {
                    let dv = g.degree_vector(v).unwrap();
                    assert_eq!(dv.in_degree(pair_color(i, i, base)), wi - 1);
                    assert_eq!(dv.out_degree(pair_color(i, i, base)), wi - 1);
                    for (jdx, &wj) in c.parts().iter().enumerate() {
                        let j = jdx as u32 + 1;
                        if i != j {
                            assert_eq!(dv.in_degree(pair_color(j, i, base)), u64::from(wj));
                            assert_eq!(dv.out_degree(pair_color(i, j, base)), u64::from(wj));
                        }
                    }
                }
            }
        }
        // Spot values at x_21 of G*[3,2] over colors (1,1),(1,2),(2,1),(2,2).
        let g = build_gstar(&comp(&[3, 2])).unwrap();
        let dv = g.degree_vector(4).unwrap();
        assert_eq!(dv.entries(), &[0, 0, 3, 0, 0, 3, 1, 1]);
    }

    #[test]
    fn g_at_x11_of_32() {
        let g = build_g(&comp(&[3, 2])).unwrap();
        let dv = g.degree_vector(1).unwrap();
        assert_eq!(dv.entries(), &[2, 4, 2, 0]);
    }

    #[test]
    fn edge_totals_are_w_times_w_minus_1() {
        for parts in [vec![2, 1], vec![3, 2], vec![2, 2, 1], vec![5]] {
            let c = comp(&parts);
            let w = c.weight() as usize;
            assert_eq!(build_g(&c).unwrap().edge_count(), w * (w - 1));
            assert_eq!(build_gstar(&c).unwrap().edge_count(), w * (w - 1));
        }
    }

    #[test]
    fn derived_classes_match_generated_ones() {
        for parts in [vec![2, 1], vec![3, 2], vec![2, 2], vec![3, 1, 1]] {
            let c = comp(&parts);
            for graph in [build_g(&c).unwrap(), build_gstar(&c).unwrap()] {
                let derived = derive_classes(&graph);
                let stored: Vec<Vec<u32>> = class_layout(&c)
                    .into_iter()
                    .filter(|cl| !cl.is_empty())
                    .collect();
                assert_eq!(derived, stored, "composition {c}");
            }
        }
        let single = build_single_edge(1, 2).unwrap();
        assert_eq!(derive_classes(&single), vec![vec![1], vec![2]]);
    }

    #[test]
    fn family_json_roundtrip() {
        for family in [
            family_g(&comp(&[2, 1])).unwrap(),
            family_gstar(&comp(&[3, 2])).unwrap(),
            family_g_cwc(3, 3).unwrap(),
            family_hstar(2, 2).unwrap(),
        ] {
            let mut buf = Vec::new();
            write_family(&mut buf, &family).unwrap();
            let back = read_family(&buf[..]).unwrap();
            assert_eq!(back, family);
        }
    }

    #[test]
    fn family_file_without_classes_derives_them() {
        let family = family_g(&comp(&[2, 1])).unwrap();
        let mut buf = Vec::new();
        write_family(&mut buf, &family).unwrap();
        let mut value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        for m in value["members"].as_array_mut().unwrap() {
            m.as_object_mut().unwrap().remove("classes");
        }
        let text = serde_json::to_vec(&value).unwrap();
        let back = read_family(&text[..]).unwrap();
        assert_eq!(back.members[0].classes, family.members[0].classes);
        assert_eq!(back.members[1].classes, family.members[1].classes);
    }
}
