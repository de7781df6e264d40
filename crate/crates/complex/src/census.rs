//! Per-translate cell census: the cells of one signed stratum, its
//! 1-skeleton, connected components, and Euler characteristics.

use std::collections::BTreeMap;

use ancestry::{
    enumerate_ancestries, enumerate_preancestries, is_thin, predicted_count_for_multiplier,
    upper_set_dim1, Ancestry, EpsVec,
};
use perm_core::ReducedWord;
use petgraph::unionfind::UnionFind;
use quat_clifford::{CliffordElement, QuatMonomial, TranslateOrbits};

use crate::error::{Error, Result};

/// Cell counts and Euler characteristic of one connected component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct ComponentCensus {
    /// Cells per dimension, trailing zeros trimmed.
    pub counts: Vec<u64>,
    /// Alternating sum of the counts.
    pub chi: i64,
    /// True for an isolated vertex whose same-row signs agree.
    pub thin: bool,
}

impl ComponentCensus {
    pub fn total_cells(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// The stratification of one translate: cells grouped by dimension, the
/// 1-skeleton, and the component partition.
#[derive(Debug, Clone)]
pub struct CellCensus {
    z: CliffordElement,
    cells: Vec<Vec<Ancestry>>,
    edges: Vec<(usize, usize)>,
    components: Vec<ComponentCensus>,
}

impl CellCensus {
    /// The translate this census describes.
    pub fn z(&self) -> &CliffordElement {
        &self.z
    }

    /// Cells by dimension; each list is sorted by sign vector.
    pub fn cells(&self) -> &[Vec<Ancestry>] {
        &self.cells
    }

    /// Number of cells in each dimension.
    pub fn per_dim(&self) -> Vec<u64> {
        self.cells.iter().map(|c| c.len() as u64).collect()
    }

    /// Edges of the 1-skeleton as vertex indices into `cells()[0]`,
    /// parallel to `cells()[1]`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Connected components, largest first.
    pub fn components(&self) -> &[ComponentCensus] {
        &self.components
    }

    /// Number of isolated thin vertices.
    pub fn thin_components(&self) -> u64 {
        self.components.iter().filter(|c| c.thin).count() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Alternating sum over all cells, which equals the sum of the
    /// per-component characteristics.
    pub fn chi(&self) -> i64 {
        self.components.iter().map(|c| c.chi).sum()
    }

    /// Largest cell dimension present.
    pub fn max_dim(&self) -> Option<usize> {
        if self.cells.is_empty() {
            None
        } else {
            Some(self.cells.len() - 1)
        }
    }
}

/// One enumeration of a word, bucketed by translate, ready to produce the
/// census of any translate cheaply.
pub struct Enumeration {
    word: ReducedWord,
    by_multiplier: BTreeMap<QuatMonomial, Vec<Ancestry>>,
}

impl Enumeration {
    pub fn new(word: &ReducedWord) -> Self {
        let mut by_multiplier: BTreeMap<QuatMonomial, Vec<Ancestry>> = BTreeMap::new();
        for a in enumerate_ancestries(word) {
            by_multiplier.entry(a.right_multiplier()).or_default().push(a);
        }
        Enumeration { word: word.clone(), by_multiplier }
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    /// Census of the translate `base * m`.
    pub fn census(&self, orbits: &TranslateOrbits, m: QuatMonomial) -> CellCensus {
        let z = orbits.translate(m).clone();
        let members = self.by_multiplier.get(&m).map(Vec::as_slice).unwrap_or(&[]);
        build_from_cells(&self.word, z, members)
    }
}

/// Assembles the census of one translate from its cells.
fn build_from_cells(word: &ReducedWord, z: CliffordElement, members: &[Ancestry]) -> CellCensus {
    let max_dim = members.iter().map(|a| a.dim()).max();
    let mut cells: Vec<Vec<Ancestry>> = match max_dim {
        None => Vec::new(),
        Some(d) => vec![Vec::new(); d + 1],
    };
    for a in members {
        cells[a.dim()].push(*a);
    }
    for list in &mut cells {
        list.sort();
    }

    let vertex_index: BTreeMap<EpsVec, usize> = cells
        .first()
        .map(|vs| vs.iter().enumerate().map(|(i, a)| (a.eps(), i)).collect())
        .unwrap_or_default();

    // Union the endpoints of every edge, then attach each higher cell to the
    // component of its all-unit vertex.
    let n_vertices = vertex_index.len();
    let mut uf = UnionFind::<usize>::new(n_vertices);
    let mut edges = Vec::new();
    if cells.len() > 1 {
        for e in &cells[1] {
            let (v1, v2) = upper_set_dim1(word, e).expect("edge has a dimension-one vector");
            let i1 = vertex_index[&v1];
            let i2 = vertex_index[&v2];
            assert_ne!(i1, i2, "edge endpoints must be distinct vertices");
            uf.union(i1, i2);
            edges.push((i1, i2));
        }
    }

    let mut per_component: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for (dim, list) in cells.iter().enumerate() {
        for a in list {
            let vertex = if dim == 0 {
                vertex_index[&a.eps()]
            } else {
                // A higher cell joins the component of its all-unit vertex.
                let mut units = EpsVec::empty();
                for x in a.eps().iter() {
                    units.push(x.signum()).unwrap();
                }
                vertex_index
                    .get(&units)
                    .copied()
                    .expect("unit projection of every cell is a vertex")
            };
            let counts = per_component.entry(uf.find(vertex)).or_default();
            if counts.len() <= dim {
                counts.resize(dim + 1, 0);
            }
            counts[dim] += 1;
        }
    }

    // A component is thin when its only cell is a vertex whose same-row
    // signs agree.
    let mut lone_vertex: BTreeMap<usize, EpsVec> = BTreeMap::new();
    if let Some(vs) = cells.first() {
        for a in vs {
            let root = uf.find(vertex_index[&a.eps()]);
            if per_component[&root] == [1] {
                lone_vertex.insert(root, a.eps());
            }
        }
    }

    let mut components: Vec<ComponentCensus> = per_component
        .iter()
        .map(|(root, counts)| {
            let chi = counts
                .iter()
                .enumerate()
                .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
                .sum();
            let thin = lone_vertex
                .get(root)
                .is_some_and(|eps| is_thin(word, eps).expect("vertices have dimension zero"));
            ComponentCensus { counts: counts.clone(), chi, thin }
        })
        .collect();

    components.sort_by(|a, b| b.counts.cmp(&a.counts).then(a.thin.cmp(&b.thin)));
    CellCensus { z, cells, edges, components }
}

/// Census of an explicit translate value.
pub fn build_census(word: &ReducedWord, z: &CliffordElement) -> Result<CellCensus> {
    let sigma = word.permutation();
    let orbits = TranslateOrbits::build(&sigma);
    let enumeration = Enumeration::new(word);
    for m in QuatMonomial::all(word.n()) {
        if orbits.translate(m) == z {
            return Ok(enumeration.census(&orbits, m));
        }
    }
    Err(Error::NotATranslate)
}

/// The Euler characteristic computed two independent ways: from the built
/// census and from the closed-form counts summed over stay/move patterns.
pub fn euler_check(word: &ReducedWord, z: &CliffordElement) -> Result<(i64, i64)> {
    let sigma = word.permutation();
    let orbits = TranslateOrbits::build(&sigma);
    let mut multiplier = None;
    for m in QuatMonomial::all(word.n()) {
        if orbits.translate(m) == z {
            multiplier = Some(m);
            break;
        }
    }
    let m = multiplier.ok_or(Error::NotATranslate)?;

    let enumeration = Enumeration::new(word);
    let census_chi = enumeration.census(&orbits, m).chi();

    let mut formula_chi = 0i64;
    for pre in enumerate_preancestries(word) {
        let predicted = predicted_count_for_multiplier(word, &pre, &orbits, m);
        let signed = predicted.count as i64;
        formula_chi += if pre.dim() % 2 == 0 { signed } else { -signed };
    }
    Ok((census_chi, formula_chi))
}
