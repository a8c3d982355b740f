//! Graph and dataset isomorphism modulo blank node relabeling.
//!
//! Blank nodes are first partitioned by iterated color refinement over
//! their neighbourhoods, then a backtracking search looks for a bijection
//! that respects the colors and maps every quad onto a quad of the other side.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

use super::{Dataset, Graph, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Quad {
    terms: [Term; 3],
    graph: Option<Term>,
}

impl Quad {
    fn slots(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter().chain(self.graph.iter())
    }

    fn has_blank(&self) -> bool {
        self.slots().any(Term::is_blank)
    }
}

fn graph_quads<'a>(graph: &'a Graph, name: Option<&Term>) -> impl Iterator<Item = Quad> + 'a {
    let name = name.cloned();
    graph.iter().map(move |t| {
        let (s, p, o) = t.into_parts();
        Quad {
            terms: [s, p, o],
            graph: name.clone(),
        }
    })
}

fn dataset_quads(d: &Dataset) -> Vec<Quad> {
    let mut quads: Vec<Quad> = graph_quads(d.default_graph(), None).collect();
    for (name, g) in d.named_graphs() {
        quads.extend(graph_quads(g, Some(name)));
    }
    quads
}

/// True iff a blank node bijection maps `a` exactly onto `b`.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.len() != b.len() {
        return false;
    }
    quads_isomorphic(
        graph_quads(a, None).collect(),
        graph_quads(b, None).collect(),
    )
}

/// Dataset variant; graph names take part in the mapping. Empty named
/// graphs are ignored.
pub fn isomorphic_datasets(a: &Dataset, b: &Dataset) -> bool {
    if a.len() != b.len() {
        return false;
    }
    quads_isomorphic(dataset_quads(a), dataset_quads(b))
}

struct Side {
    ground: HashSet<Quad>,
    blank_quads: Vec<Quad>,
    blanks: Vec<String>,
    adjacency: HashMap<String, Vec<usize>>,
}

impl Side {
    fn new(quads: Vec<Quad>) -> Self {
        let mut ground = HashSet::new();
        let mut blank_quads = Vec::new();
        for q in quads {
            if q.has_blank() {
                blank_quads.push(q);
            } else {
                ground.insert(q);
            }
        }
        let mut adjacency: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, q) in blank_quads.iter().enumerate() {
            let mut seen = HashSet::new();
            for t in q.slots() {
                if let Term::BlankNode(l) = t {
                    if seen.insert(l) {
                        adjacency.entry(l.clone()).or_default().push(i);
                    }
                }
            }
        }
        let mut blanks: Vec<String> = adjacency.keys().cloned().collect();
        blanks.sort();
        Self {
            ground,
            blank_quads,
            blanks,
            adjacency,
        }
    }

    fn refine(&self, colors: &HashMap<String, u64>) -> HashMap<String, u64> {
        self.blanks
            .iter()
            .map(|b| {
                let mut sigs: Vec<u64> = self.adjacency[b]
                    .iter()
                    .map(|&i| quad_signature(&self.blank_quads[i], b, colors))
                    .collect();
                sigs.sort_unstable();
                let mut h = DefaultHasher::new();
                colors[b].hash(&mut h);
                sigs.hash(&mut h);
                (b.clone(), h.finish())
            })
            .collect()
    }
}

fn quad_signature(q: &Quad, focus: &str, colors: &HashMap<String, u64>) -> u64 {
    let mut h = DefaultHasher::new();
    for (slot, t) in q.slots().enumerate() {
        slot.hash(&mut h);
        match t {
            Term::BlankNode(l) if l == focus => 0u8.hash(&mut h),
            Term::BlankNode(l) => {
                1u8.hash(&mut h);
                colors[l].hash(&mut h);
            }
            other => {
                2u8.hash(&mut h);
                other.hash(&mut h);
            }
        }
    }
    // Distinguish a missing graph name from a present one.
    q.graph.is_some().hash(&mut h);
    h.finish()
}

fn histogram(colors: &HashMap<String, u64>) -> Vec<u64> {
    let mut v: Vec<u64> = colors.values().copied().collect();
    v.sort_unstable();
    v
}

fn distinct(colors: &HashMap<String, u64>) -> usize {
    colors.values().collect::<HashSet<_>>().len()
}

fn quads_isomorphic(a: Vec<Quad>, b: Vec<Quad>) -> bool {
    let a = Side::new(a);
    let b = Side::new(b);
    if a.ground != b.ground
        || a.blank_quads.len() != b.blank_quads.len()
        || a.blanks.len() != b.blanks.len()
    {
        return false;
    }
    let mut ca: HashMap<String, u64> = a.blanks.iter().map(|l| (l.clone(), 0)).collect();
    let mut cb: HashMap<String, u64> = b.blanks.iter().map(|l| (l.clone(), 0)).collect();
    loop {
        let na = a.refine(&ca);
        let nb = b.refine(&cb);
        if histogram(&na) != histogram(&nb) {
            return false;
        }
        let stable = distinct(&na) == distinct(&ca);
        ca = na;
        cb = nb;
        if stable {
            break;
        }
    }

    let target: HashSet<&Quad> = b.blank_quads.iter().collect();
    let mut by_color: HashMap<u64, Vec<&String>> = HashMap::new();
    for l in &b.blanks {
        by_color.entry(cb[l]).or_default().push(l);
    }
    let mut order: Vec<&String> = a.blanks.iter().collect();
    order.sort_by_key(|l| (by_color.get(&ca[*l]).map_or(0, Vec::len), std::cmp::Reverse(a.adjacency[*l].len())));

    let mut search = Search {
        a: &a,
        target,
        candidates: order
            .iter()
            .map(|l| by_color.get(&ca[*l]).cloned().unwrap_or_default())
            .collect(),
        order,
        forward: HashMap::new(),
        used: HashSet::new(),
    };
    search.assign(0)
}

struct Search<'a> {
    a: &'a Side,
    target: HashSet<&'a Quad>,
    order: Vec<&'a String>,
    candidates: Vec<Vec<&'a String>>,
    forward: HashMap<&'a str, &'a str>,
    used: HashSet<&'a str>,
}

impl<'a> Search<'a> {
    fn assign(&mut self, depth: usize) -> bool {
        let Some(&node) = self.order.get(depth) else {
            return true;
        };
        let candidates = self.candidates[depth].clone();
        for cand in candidates {
            if self.used.contains(cand.as_str()) {
                continue;
            }
            self.forward.insert(node, cand);
            self.used.insert(cand);
            if self.consistent(node) && self.assign(depth + 1) {
                return true;
            }
            self.forward.remove(node.as_str());
            self.used.remove(cand.as_str());
        }
        false
    }

    // Every quad touching `node` whose blanks are all mapped must land in the target.
    fn consistent(&self, node: &str) -> bool {
        'quads: for &i in &self.a.adjacency[node] {
            let q = &self.a.blank_quads[i];
            let mut mapped = q.clone();
            for t in mapped.terms.iter_mut().chain(mapped.graph.iter_mut()) {
                if let Term::BlankNode(l) = t {
                    match self.forward.get(l.as_str()) {
                        Some(m) => *l = (*m).to_owned(),
                        None => continue 'quads,
                    }
                }
            }
            if !self.target.contains(&mapped) {
                return false;
            }
        }
        true
    }
}
