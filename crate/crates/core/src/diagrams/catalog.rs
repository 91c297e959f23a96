use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphId {
    Wtr,
    Bbl,
    Mdl,
    Tsq,
    Tet,
}

impl GraphId {
    pub fn label(self) -> &'static str {
        match self {
            GraphId::Wtr => "wtr",
            GraphId::Bbl => "bbl",
            GraphId::Mdl => "mdl",
            GraphId::Tsq => "tsq",
            GraphId::Tet => "tet",
        }
    }
}

impl fmt::Display for GraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One of the five trivalent internal graphs of a 3-loop Jacobi diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InternalGraph {
    pub id: GraphId,
    pub vertex_count: u32,
    pub edge_count: u32,
    pub betti: u32,
    /// Whether a polynomial presentation is available here.
    pub computable: bool,
}

impl InternalGraph {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count as i64
    }
}

const fn graph(id: GraphId, computable: bool) -> InternalGraph {
    InternalGraph {
        id,
        vertex_count: 4,
        edge_count: 6,
        betti: 3,
        computable,
    }
}

static CATALOG: [InternalGraph; 5] = [
    graph(GraphId::Wtr, false),
    graph(GraphId::Bbl, false),
    graph(GraphId::Mdl, false),
    graph(GraphId::Tsq, true),
    graph(GraphId::Tet, true),
];

pub fn catalog() -> &'static [InternalGraph; 5] {
    &CATALOG
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    /// Errors unless `n` has this parity.
    pub fn check(self, n: u32) -> Result<()> {
        if Parity::of(n) == self {
            Ok(())
        } else {
            Err(Error::Parity(format!("{n} is not {}", self.label())))
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Degree data of a 3-loop diagram with `legs` univalent vertices.
///
/// Four internal trivalent vertices plus two vertices per leg give
/// `(4 + 2·legs) / 2 = legs + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeInfo {
    pub legs: u32,
    pub jacobi_degree: u32,
    pub parity: Parity,
}

impl DegreeInfo {
    pub fn new(legs: u32) -> Self {
        let internal = catalog()[0].vertex_count;
        DegreeInfo {
            legs,
            jacobi_degree: (internal + 2 * legs) / 2,
            parity: Parity::of(legs),
        }
    }
}
