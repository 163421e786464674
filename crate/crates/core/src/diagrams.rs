//! The tensor diagram `W_{π,r}` of type `(n, 2n)`.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinat::{FlamingoContext, OrderedSetPartition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Vertex {
    Boundary(usize),
    W(usize),
    U(usize),
    B(usize),
}

impl Vertex {
    pub fn is_black(self) -> bool {
        matches!(self, Vertex::Boundary(_) | Vertex::B(_))
    }

    pub fn is_boundary(self) -> bool {
        matches!(self, Vertex::Boundary(_))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Boundary(i) => write!(f, "{i}"),
            Vertex::W(i) => write!(f, "w{i}"),
            Vertex::U(i) => write!(f, "u{i}"),
            Vertex::B(i) => write!(f, "b{i}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "vertex",
            detail: s.to_string(),
        };
        let index = |t: &str| t.parse::<usize>().ok().filter(|&i| i > 0).ok_or_else(bad);
        match s.chars().next() {
            Some('w') => Ok(Vertex::W(index(&s[1..])?)),
            Some('u') => Ok(Vertex::U(index(&s[1..])?)),
            Some('b') => Ok(Vertex::B(index(&s[1..])?)),
            _ => Ok(Vertex::Boundary(index(s)?)),
        }
    }
}

impl From<Vertex> for String {
    fn from(v: Vertex) -> Self {
        v.to_string()
    }
}

impl TryFrom<String> for Vertex {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: Vertex,
    pub b: Vertex,
    pub weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDiagram {
    pub n: usize,
    pub boundary: Vec<Vertex>,
    pub interior: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// Builds `W_{π,r}`; weight-zero edges are left out.
pub fn build_tensor_diagram(pi: &OrderedSetPartition, r: usize) -> Result<TensorDiagram> {
    let ctx = FlamingoContext::new(pi, r)?;
    let FlamingoContext { n, d, nu, .. } = ctx;
    let mut edges = Vec::new();
    let mut push = |a: Vertex, b: Vertex, weight: usize| {
        if weight > 0 {
            edges.push(Edge { a, b, weight });
        }
    };
    for i in 1..=d {
        for e in ctx.lower_rows() {
            push(Vertex::W(i), Vertex::Boundary(e), 1);
        }
        for &x in pi.block(i - 1) {
            push(Vertex::W(i), Vertex::Boundary(x + n), 1);
        }
    }
    for i in 1..d {
        for s in ctx.tentacle_rows() {
            push(Vertex::U(i), Vertex::Boundary(s), 1);
        }
        push(Vertex::B(i), Vertex::W(i), nu - pi.block(i - 1).len());
        push(Vertex::B(i), Vertex::U(i), r * d);
        push(Vertex::B(i), Vertex::W(d), ctx.nu_i[i - 1]);
    }
    let interior = (1..=d)
        .map(Vertex::W)
        .chain((1..d).map(Vertex::U))
        .chain((1..d).map(Vertex::B))
        .collect();
    Ok(TensorDiagram {
        n,
        boundary: (1..=2 * n).map(Vertex::Boundary).collect(),
        interior,
        edges,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Vertex,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.vertex, self.message)
    }
}

impl TensorDiagram {
    pub fn weight_sum(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|e| e.a == v || e.b == v)
            .map(|e| e.weight)
            .sum()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.a == v {
                    Some(e.b)
                } else if e.b == v {
                    Some(e.a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Every problem found; empty for a well-formed diagram.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let known = |v: &Vertex| self.boundary.contains(v) || self.interior.contains(v);
        for e in &self.edges {
            for v in [e.a, e.b] {
                if !known(&v) {
                    out.push(Violation {
                        vertex: v,
                        message: "edge endpoint is not a vertex".into(),
                    });
                }
            }
            if e.a.is_black() == e.b.is_black() {
                out.push(Violation {
                    vertex: e.a,
                    message: format!("edge to {} joins two vertices of one color", e.b),
                });
            }
            if e.weight == 0 || e.weight > self.n {
                out.push(Violation {
                    vertex: e.a,
                    message: format!(
                        "edge to {} has weight {} outside 1..={}",
                        e.b, e.weight, self.n
                    ),
                });
            }
        }
        for &v in &self.interior {
            let sum = self.weight_sum(v);
            if sum != self.n {
                out.push(Violation {
                    vertex: v,
                    message: format!("incident weights sum to {sum}, expected {}", self.n),
                });
            }
        }
        out
    }

    /// Whether the graph with every boundary vertex split into leaves has no
    /// cycle.
    pub fn unclasping_is_acyclic(&self) -> bool {
        let index: HashMap<Vertex, usize> = self
            .interior
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut parent: Vec<usize> = (0..self.interior.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            if e.a.is_boundary() || e.b.is_boundary() {
                // a split boundary copy is a fresh leaf; only parallel edges close a cycle
                if !seen.insert((e.a.min(e.b), e.a.max(e.b))) {
                    return false;
                }
                continue;
            }
            let (Some(&a), Some(&b)) = (index.get(&e.a), index.get(&e.b)) else {
                return false;
            };
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn export(&self, format: &str) -> Result<String> {
        match format {
            "dot" => Ok(self.to_dot()),
            "json" => Ok(self.to_json()),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "diagram JSON",
            detail: e.to_string(),
        })
    }

    /// Graphviz source with the boundary placed clockwise on a circle.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let m = self.boundary.len().max(1) as f64;
        let radius = 2.0 + m / 4.0;
        writeln!(s, "graph W {{").unwrap();
        writeln!(s, "  layout=neato;").unwrap();
        writeln!(
            s,
            "  node [shape=circle, width=0.3, fixedsize=true, fontsize=9];"
        )
        .unwrap();
        for (k, v) in self.boundary.iter().enumerate() {
            let angle = std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * k as f64 / m;
            writeln!(
                s,
                "  \"{v}\" [style=filled, fillcolor=black, fontcolor=white, pos=\"{:.3},{:.3}!\"];",
                radius * angle.cos(),
                radius * angle.sin()
            )
            .unwrap();
        }
        for v in &self.interior {
            if v.is_black() {
                writeln!(s, "  {v} [style=filled, fillcolor=black, fontcolor=white];").unwrap();
            } else {
                writeln!(s, "  {v} [style=solid, fillcolor=white];").unwrap();
            }
        }
        for e in &self.edges {
            let quote = |v: Vertex| {
                if v.is_boundary() {
                    format!("\"{v}\"")
                } else {
                    v.to_string()
                }
            };
            writeln!(
                s,
                "  {} -- {} [label=\"{}\"];",
                quote(e.a),
                quote(e.b),
                e.weight
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }
}
