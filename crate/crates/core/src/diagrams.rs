//! Planar diagrams built from derivations by gluing one face per rewrite
//! step onto a tracked boundary path. A diagram for a relation `(u, v)`
//! has two exterior paths labeled `u` and `v`; its face count equals the
//! number of face-creating steps, so minimal derivations correspond to
//! minimal-face diagrams. For group-derived rule systems free-cancellation
//! steps identify edges instead of creating faces.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::presentations::{Kind, Presentation, RuleOrigin};
use crate::rewrite::{Derivation, RewriteError};
use crate::words::{Alphabet, LetterId, Word, WordError};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] crate::presentations::PresentationError),
    #[error("free-cancellation step on an alphabet without inverses")]
    NoInvolution,
    #[error("derivation step {0} does not line up with the tracked boundary path")]
    PathMismatch(usize),
}

pub type VertexId = usize;
pub type EdgeId = usize;

/// One traversal of an edge; `forward: false` reads the inverse letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub edge: EdgeId,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
    pub label: LetterId,
}

/// A face glued for a rewrite step `(lhs, rhs)`: its boundary consists of
/// the replaced path (`upper`, labeled `lhs`) and the replacement path
/// (`lower`, labeled `rhs`). Either path may be empty for one-sided
/// relations, making the boundary a simple cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub lhs: Word,
    pub rhs: Word,
    pub upper: Vec<Step>,
    pub lower: Vec<Step>,
}

#[derive(Debug, Clone)]
pub struct Diagram {
    pub alphabet: Arc<Alphabet>,
    parent: Vec<VertexId>,
    pub edges: Vec<Edge>,
    /// Edge identified away into `(other edge, flip direction)`.
    alias: Vec<Option<(EdgeId, bool)>>,
    deleted: Vec<bool>,
    pub faces: Vec<Face>,
    pub face_deleted: Vec<bool>,
    pub source: VertexId,
    pub sink: VertexId,
    pub exterior_u: Vec<Step>,
    pub exterior_v: Vec<Step>,
    pub u_word: Word,
    pub v_word: Word,
    /// Human-readable record of identifications and eliminated portions.
    pub log: Vec<String>,
}

impl Diagram {
    fn find(&self, mut v: VertexId) -> VertexId {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: VertexId, b: VertexId) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop] = keep;
        }
    }

    /// Resolve an edge reference through identifications.
    pub fn resolve(&self, s: Step) -> Step {
        let mut s = s;
        while let Some((e, flip)) = self.alias[s.edge] {
            s = Step { edge: e, forward: s.forward != flip };
        }
        s
    }

    fn step_ends(&self, s: Step) -> (VertexId, VertexId) {
        let s = self.resolve(s);
        let e = &self.edges[s.edge];
        let (a, b) = (self.find(e.from), self.find(e.to));
        if s.forward {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Live edge ids after identification and elimination.
    pub fn live_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&e| self.alias[e].is_none() && !self.deleted[e])
            .collect()
    }

    /// Live vertex ids: class representatives touched by a live edge,
    /// plus the designated source and sink.
    pub fn live_vertices(&self) -> Vec<VertexId> {
        let mut out: HashSet<VertexId> = HashSet::new();
        out.insert(self.find(self.source));
        out.insert(self.find(self.sink));
        for e in self.live_edges() {
            out.insert(self.find(self.edges[e].from));
            out.insert(self.find(self.edges[e].to));
        }
        let mut out: Vec<VertexId> = out.into_iter().collect();
        out.sort_unstable();
        out
    }

    pub fn face_count(&self) -> usize {
        self.face_deleted.iter().filter(|d| !**d).count()
    }

    /// The word read along a sequence of steps.
    pub fn path_label(&self, steps: &[Step]) -> Result<Word, DiagramError> {
        let mut letters = Vec::with_capacity(steps.len());
        for &s in steps {
            let r = self.resolve(s);
            let l = self.edges[r.edge].label;
            if r.forward {
                letters.push(l);
            } else {
                letters.push(self.alphabet.inverse_of(l).ok_or(DiagramError::NoInvolution)?);
            }
        }
        Ok(Word::from_letters(self.alphabet.clone(), letters))
    }

    /// How many live faces each live edge belongs to.
    fn face_membership(&self) -> HashMap<EdgeId, usize> {
        let mut count: HashMap<EdgeId, usize> = HashMap::new();
        for e in self.live_edges() {
            count.insert(e, 0);
        }
        for (fi, face) in self.faces.iter().enumerate() {
            if self.face_deleted[fi] {
                continue;
            }
            let mut touched: HashSet<EdgeId> = HashSet::new();
            for &s in face.upper.iter().chain(&face.lower) {
                touched.insert(self.resolve(s).edge);
            }
            for e in touched {
                if let Some(c) = count.get_mut(&e) {
                    *c += 1;
                }
            }
        }
        count
    }

    /// Edges on one face count once, edges shared by two faces count
    /// twice; this matches the work cost of the underlying derivation up
    /// to edge sharing.
    pub fn work(&self) -> u64 {
        self.face_membership()
            .values()
            .map(|&c| match c {
                1 => 1u64,
                2 => 2,
                _ => 0,
            })
            .sum()
    }

    /// Structural checks; an empty list means the diagram is well formed.
    /// With a presentation, face boundary relations are also checked
    /// against its defining relations.
    pub fn validate(&self, p: Option<&Presentation>) -> Vec<String> {
        let mut out = Vec::new();
        let live = self.live_edges();
        let vertices = self.live_vertices();

        // degree profile: every boundary word flows from source to sink,
        // so with distinct endpoints the source is the only vertex
        // without incoming edges and the sink the only one without
        // outgoing ones (skipped for inverse-closed alphabets, where an
        // edge is traversed in both directions)
        if !self.alphabet.has_involution() && self.find(self.source) != self.find(self.sink) {
            let mut indeg: HashMap<VertexId, usize> = vertices.iter().map(|&v| (v, 0)).collect();
            let mut outdeg = indeg.clone();
            for &e in &live {
                let (a, b) = (self.find(self.edges[e].from), self.find(self.edges[e].to));
                *outdeg.get_mut(&a).unwrap() += 1;
                *indeg.get_mut(&b).unwrap() += 1;
            }
            let sources: Vec<_> = vertices.iter().filter(|v| indeg[v] == 0).collect();
            let sinks: Vec<_> = vertices.iter().filter(|v| outdeg[v] == 0).collect();
            if sources != vec![&self.find(self.source)] {
                out.push(format!("expected the single source {}, found {sources:?}", self.find(self.source)));
            }
            if sinks != vec![&self.find(self.sink)] {
                out.push(format!("expected the single sink {}, found {sinks:?}", self.find(self.sink)));
            }
        }

        // connectivity
        if !live.is_empty() {
            let mut seen: HashSet<VertexId> = HashSet::new();
            let mut stack = vec![self.find(self.source)];
            while let Some(v) = stack.pop() {
                if !seen.insert(v) {
                    continue;
                }
                for &e in &live {
                    let (a, b) = (self.find(self.edges[e].from), self.find(self.edges[e].to));
                    if a == v && !seen.contains(&b) {
                        stack.push(b);
                    }
                    if b == v && !seen.contains(&a) {
                        stack.push(a);
                    }
                }
            }
            if seen.len() != vertices.len() {
                out.push(format!(
                    "complex is disconnected: reached {} of {} vertices",
                    seen.len(),
                    vertices.len()
                ));
            }
        }

        // face boundaries read the recorded relation
        for (fi, face) in self.faces.iter().enumerate() {
            if self.face_deleted[fi] {
                continue;
            }
            match (self.path_label(&face.upper), self.path_label(&face.lower)) {
                (Ok(a), Ok(b)) => {
                    if a != face.lhs || b != face.rhs {
                        out.push(format!(
                            "face {fi} reads ({}, {}) instead of ({}, {})",
                            a.render(),
                            b.render(),
                            face.lhs.render(),
                            face.rhs.render()
                        ));
                    } else if let Some(p) = p {
                        if !is_defining_relation(p, &face.lhs, &face.rhs) {
                            out.push(format!(
                                "face {fi} relation ({}, {}) is not a defining relation",
                                face.lhs.render(),
                                face.rhs.render()
                            ));
                        }
                    }
                }
                _ => out.push(format!("face {fi} boundary is unreadable")),
            }
        }

        // an edge borders at most two faces
        for (e, c) in self.face_membership() {
            if c > 2 {
                out.push(format!("edge {e} belongs to {c} faces"));
            }
        }

        // fixed exterior paths read u and v and join source to sink
        for (name, steps, word) in [
            ("u", &self.exterior_u, &self.u_word),
            ("v", &self.exterior_v, &self.v_word),
        ] {
            match self.path_label(steps) {
                Ok(l) if &l == word => {}
                Ok(l) => out.push(format!(
                    "exterior path {name} reads {} instead of {}",
                    l.render(),
                    word.render()
                )),
                Err(_) => out.push(format!("exterior path {name} is unreadable")),
            }
            let mut at = self.find(self.source);
            let mut ok = true;
            for &s in steps {
                let (a, b) = self.step_ends(s);
                if a != at {
                    ok = false;
                    break;
                }
                at = b;
            }
            if !ok || at != self.find(self.sink) {
                out.push(format!("exterior path {name} does not join source to sink"));
            }
        }

        // planarity bookkeeping: V - E + (F + outer region) = 2 for a
        // connected complex
        if !live.is_empty() {
            let euler = vertices.len() as i64 - live.len() as i64 + self.face_count() as i64 + 1;
            if euler != 2 {
                out.push(format!("Euler characteristic is {euler}, expected 2"));
            }
        }

        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let step = |s: &Step| serde_json::json!({ "edge": s.edge, "forward": s.forward });
        serde_json::json!({
            "vertices": self.live_vertices(),
            "edges": self
                .live_edges()
                .iter()
                .map(|&e| serde_json::json!({
                    "id": e,
                    "from": self.find(self.edges[e].from),
                    "to": self.find(self.edges[e].to),
                    "label": self.alphabet.name(self.edges[e].label),
                }))
                .collect::<Vec<_>>(),
            "faces": self
                .faces
                .iter()
                .enumerate()
                .filter(|(i, _)| !self.face_deleted[*i])
                .map(|(_, f)| serde_json::json!({
                    "lhs": f.lhs.render(),
                    "rhs": f.rhs.render(),
                    "upper": f.upper.iter().map(|s| step(&self.resolve(*s))).collect::<Vec<_>>(),
                    "lower": f.lower.iter().map(|s| step(&self.resolve(*s))).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>(),
            "source": self.find(self.source),
            "sink": self.find(self.sink),
            "exterior_paths": {
                "u": self.exterior_u.iter().map(|s| step(&self.resolve(*s))).collect::<Vec<_>>(),
                "v": self.exterior_v.iter().map(|s| step(&self.resolve(*s))).collect::<Vec<_>>(),
            },
            "log": self.log,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph diagram {\n  rankdir=LR;\n");
        for v in self.live_vertices() {
            let mark = if v == self.find(self.source) {
                " [shape=doublecircle]"
            } else if v == self.find(self.sink) {
                " [shape=doubleoctagon]"
            } else {
                ""
            };
            out.push_str(&format!("  v{v}{mark};\n"));
        }
        for e in self.live_edges() {
            out.push_str(&format!(
                "  v{} -> v{} [label=\"{}\"];\n",
                self.find(self.edges[e].from),
                self.find(self.edges[e].to),
                self.alphabet.name(self.edges[e].label)
            ));
        }
        for (i, f) in self.faces.iter().enumerate() {
            if !self.face_deleted[i] {
                out.push_str(&format!("  // face {i}: {} = {}\n", f.lhs.render(), f.rhs.render()));
            }
        }
        out.push_str("}\n");
        out
    }
}

fn is_defining_relation(p: &Presentation, lhs: &Word, rhs: &Word) -> bool {
    match p.kind {
        Kind::Monoid => p.finite_rules().map_or(false, |rules| {
            rules.iter().any(|r| {
                (r.pair.lhs == *lhs && r.pair.rhs == *rhs)
                    || (r.pair.lhs == *rhs && r.pair.rhs == *lhs)
            })
        }),
        Kind::Group => p.group_to_monoid().map_or(false, |m| {
            m.finite_rules().map_or(false, |rules| {
                rules.iter().any(|r| {
                    r.origin != RuleOrigin::Free
                        && ((r.pair.lhs == *lhs && r.pair.rhs == *rhs)
                            || (r.pair.lhs == *rhs && r.pair.rhs == *lhs))
                })
            })
        }),
    }
}

/// Glue a diagram from a derivation, one face per non-free step. The
/// derivation must replay; its start and end words label the two exterior
/// paths.
pub fn build_diagram(d: &Derivation, p: &Presentation) -> Result<Diagram, DiagramError> {
    if !d.start.same_alphabet(&Word::empty(p.alphabet.clone())) {
        return Err(WordError::AlphabetMismatch.into());
    }
    let words = d.replay()?;
    let u = d.start.clone();
    let alphabet = u.alphabet().clone();

    // base path spelling u
    let mut dia = Diagram {
        alphabet: alphabet.clone(),
        parent: (0..=u.len()).collect(),
        edges: u
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &l)| Edge { from: i, to: i + 1, label: l })
            .collect(),
        alias: vec![None; u.len()],
        deleted: vec![false; u.len()],
        faces: Vec::new(),
        face_deleted: Vec::new(),
        source: 0,
        sink: u.len(),
        exterior_u: (0..u.len()).map(|e| Step { edge: e, forward: true }).collect(),
        exterior_v: Vec::new(),
        u_word: u.clone(),
        v_word: words.last().unwrap().clone(),
        log: Vec::new(),
    };
    let mut path = dia.exterior_u.clone();

    for (si, step) in d.steps.iter().enumerate() {
        let (pos, a, b) = (step.position, &step.lhs, &step.rhs);
        if pos + a.len() > path.len() {
            return Err(DiagramError::PathMismatch(si));
        }
        let segment: Vec<Step> = path[pos..pos + a.len()].to_vec();
        let seg_start = if let Some(&first) = segment.first() {
            dia.step_ends(first).0
        } else {
            // empty left side: anchor at the vertex between path steps
            vertex_at(&dia, &path, pos)
        };
        let seg_end = if let Some(&last) = segment.last() {
            dia.step_ends(last).1
        } else {
            seg_start
        };

        let free = step.origin == RuleOrigin::Free;
        if free && b.is_empty() {
            // cancellation: the two boundary edges become one
            let s1 = dia.resolve(segment[0]);
            let s2 = dia.resolve(segment[1]);
            if s1.edge == s2.edge {
                // folding an edge onto itself pinches off the enclosed
                // part; it is removed below
                dia.log.push(format!("step {si}: edge {} folded onto itself", s1.edge));
            } else {
                dia.alias[s2.edge] = Some((s1.edge, s1.forward == s2.forward));
                dia.log.push(format!("step {si}: edge {} identified with edge {}", s2.edge, s1.edge));
            }
            dia.union(seg_start, seg_end);
            path.splice(pos..pos + 2, std::iter::empty());
            eliminate_enclosed(&mut dia, &path, si);
        } else if free && a.is_empty() {
            // insertion: a spike traversed forward then backward
            let x = b.letters()[0];
            let q = dia.parent.len();
            dia.parent.push(q);
            let e = dia.edges.len();
            dia.edges.push(Edge { from: seg_start, to: q, label: x });
            dia.alias.push(None);
            dia.deleted.push(false);
            path.splice(pos..pos, [Step { edge: e, forward: true }, Step { edge: e, forward: false }]);
            dia.log.push(format!("step {si}: spike edge {e} inserted"));
        } else {
            // a face: new boundary path spelling b from seg_start to
            // seg_end
            let lower: Vec<Step> = if b.is_empty() {
                dia.union(seg_start, seg_end);
                Vec::new()
            } else {
                let mut steps = Vec::with_capacity(b.len());
                let mut at = seg_start;
                for (i, &l) in b.letters().iter().enumerate() {
                    let next = if i + 1 == b.len() {
                        seg_end
                    } else {
                        let q = dia.parent.len();
                        dia.parent.push(q);
                        q
                    };
                    let e = dia.edges.len();
                    dia.edges.push(Edge { from: at, to: next, label: l });
                    dia.alias.push(None);
                    dia.deleted.push(false);
                    steps.push(Step { edge: e, forward: true });
                    at = next;
                }
                steps
            };
            dia.faces.push(Face { lhs: a.clone(), rhs: b.clone(), upper: segment, lower: lower.clone() });
            dia.face_deleted.push(false);
            path.splice(pos..pos + a.len(), lower);
        }
    }

    dia.exterior_v = path;
    dia.source = dia.find(dia.source);
    dia.sink = dia.find(dia.sink);
    Ok(dia)
}

fn vertex_at(dia: &Diagram, path: &[Step], pos: usize) -> VertexId {
    if pos < path.len() {
        dia.step_ends(path[pos]).0
    } else if let Some(&last) = path.last() {
        dia.step_ends(last).1
    } else {
        dia.find(dia.source)
    }
}

/// After an identification, portions enclosed by the folded cycles are no
/// longer connected to the boundary; remove and log them.
fn eliminate_enclosed(dia: &mut Diagram, path: &[Step], si: usize) {
    let mut keep: HashSet<VertexId> = HashSet::new();
    let mut stack: Vec<VertexId> = vec![dia.find(dia.source), dia.find(dia.sink)];
    for &s in path.iter().chain(&dia.exterior_u) {
        let (a, b) = dia.step_ends(s);
        stack.push(a);
        stack.push(b);
    }
    let live = dia.live_edges();
    while let Some(v) = stack.pop() {
        if !keep.insert(v) {
            continue;
        }
        for &e in &live {
            let (a, b) = (dia.find(dia.edges[e].from), dia.find(dia.edges[e].to));
            if a == v && !keep.contains(&b) {
                stack.push(b);
            }
            if b == v && !keep.contains(&a) {
                stack.push(a);
            }
        }
    }
    for e in live {
        let (a, b) = (dia.find(dia.edges[e].from), dia.find(dia.edges[e].to));
        if !keep.contains(&a) || !keep.contains(&b) {
            dia.deleted[e] = true;
            dia.log.push(format!("step {si}: enclosed edge {e} eliminated"));
        }
    }
    for fi in 0..dia.faces.len() {
        if dia.face_deleted[fi] {
            continue;
        }
        let gone = dia.faces[fi]
            .upper
            .iter()
            .chain(&dia.faces[fi].lower)
            .any(|&s| dia.deleted[dia.resolve(s).edge]);
        if gone {
            dia.face_deleted[fi] = true;
            dia.log.push(format!("step {si}: enclosed face {fi} eliminated"));
        }
    }
}
