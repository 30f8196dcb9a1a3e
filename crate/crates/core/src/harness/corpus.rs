use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{DomError, Result};
use crate::gadgets::{
    gadget_by_name, h_star, random_cactus, random_connected, random_high_girth, random_tree, random_unicyclic, GadgetDescriptor,
};
use crate::graph::{is_connected, read_graph6_lines, Graph, Tier};
use crate::recognizers::{self as rec};

/// Largest order the internal exhaustive corpus will enumerate.
pub const EXHAUSTIVE_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomFamily {
    /// Connected `G(n, p)` samples, `3 <= n <= 14`.
    Connected,
    /// Uniform labelled trees, `3 <= n <= 20`.
    Tree,
    /// A tree plus one closing edge, `3 <= n <= 18`.
    Unicyclic,
    /// Cacti with `1 <= n <= 16`.
    Cactus,
    /// Trees with a few cycles of length at least 7, `7 <= n <= 24`.
    Girth7,
    /// `H*` extended by up to two simplicial vertices, so still chordal.
    ChordalHStar,
}

impl RandomFamily {
    const ALL: [(&'static str, RandomFamily); 6] = [
        ("connected", RandomFamily::Connected),
        ("tree", RandomFamily::Tree),
        ("unicyclic", RandomFamily::Unicyclic),
        ("cactus", RandomFamily::Cactus),
        ("girth7", RandomFamily::Girth7),
        ("chordal-hstar", RandomFamily::ChordalHStar),
    ];

    fn name(self) -> &'static str {
        Self::ALL.iter().find(|(_, f)| *f == self).expect("listed").0
    }

    fn sample(self, rng: &mut ChaCha8Rng) -> Result<Graph> {
        let seed: u64 = rng.gen();
        match self {
            RandomFamily::Connected => {
                let n = rng.gen_range(3..=14);
                let p = rng.gen_range(0.1..0.6);
                random_connected(n, p, seed)
            }
            RandomFamily::Tree => random_tree(rng.gen_range(3..=20), seed),
            RandomFamily::Unicyclic => random_unicyclic(rng.gen_range(3..=18), seed),
            RandomFamily::Cactus => random_cactus(rng.gen_range(1..=16), 0.6, seed),
            RandomFamily::Girth7 => {
                let n = rng.gen_range(7..=24);
                random_high_girth(n, rng.gen_range(1..=3), 7, seed)
            }
            RandomFamily::ChordalHStar => {
                let mut g = h_star()?.graph;
                for _ in 0..rng.gen_range(0..=2) {
                    g = attach_simplicial(&g, rng);
                }
                Ok(g)
            }
        }
    }
}

/// Adds a vertex adjacent to a random clique: an edge or a triangle when one
/// is available at the chosen edge, otherwise a single vertex.
fn attach_simplicial(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let edges = g.edges();
    let (u, v) = edges[rng.gen_range(0..edges.len())];
    let common = (g.neighbors(u) & g.neighbors(v)).to_vec();
    let mut clique = vec![u, v];
    if !common.is_empty() && rng.gen_bool(0.5) {
        clique.push(common[rng.gen_range(0..common.len())]);
    } else if rng.gen_bool(0.3) {
        clique.pop();
    }
    let n = g.order();
    let mut all = g.edges();
    all.extend(clique.into_iter().map(|c| (c, n)));
    Graph::from_edge_list(n + 1, &all).expect("valid extension")
}

impl FromStr for RandomFamily {
    type Err = DomError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, f)| *f)
            .ok_or_else(|| DomError::InvalidConfig(format!("unknown random family `{s}`")))
    }
}

/// Class predicates usable as corpus filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    Tree,
    Path,
    Cycle,
    Unicyclic,
    Cactus,
    Block,
    Cograph,
    DistanceHereditary,
    Chordal,
    HStarFree,
    Girth7,
}

impl ClassFilter {
    const ALL: [(&'static str, ClassFilter); 11] = [
        ("tree", ClassFilter::Tree),
        ("path", ClassFilter::Path),
        ("cycle", ClassFilter::Cycle),
        ("unicyclic", ClassFilter::Unicyclic),
        ("cactus", ClassFilter::Cactus),
        ("block", ClassFilter::Block),
        ("cograph", ClassFilter::Cograph),
        ("dh", ClassFilter::DistanceHereditary),
        ("chordal", ClassFilter::Chordal),
        ("h-star-free", ClassFilter::HStarFree),
        ("girth7", ClassFilter::Girth7),
    ];

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            ClassFilter::Tree => rec::is_tree(g),
            ClassFilter::Path => rec::is_path(g),
            ClassFilter::Cycle => rec::is_cycle(g),
            ClassFilter::Unicyclic => rec::is_unicyclic(g),
            ClassFilter::Cactus => rec::is_cactus(g).unwrap_or(false),
            ClassFilter::Block => rec::is_block_graph(g).unwrap_or(false),
            ClassFilter::Cograph => rec::is_cograph(g),
            ClassFilter::DistanceHereditary => rec::is_distance_hereditary(g).unwrap_or(false),
            ClassFilter::Chordal => rec::is_chordal(g),
            ClassFilter::HStarFree => rec::is_h_star_free(g),
            ClassFilter::Girth7 => crate::graph::girth(g).at_least(7),
        }
    }

    fn name(self) -> &'static str {
        Self::ALL.iter().find(|(_, f)| *f == self).expect("listed").0
    }
}

impl FromStr for ClassFilter {
    type Err = DomError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, f)| *f)
            .ok_or_else(|| DomError::InvalidConfig(format!("unknown class filter `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    /// Every labelled connected graph on `1..=max_n` vertices.
    Exhaustive(usize),
    /// A graph6 file, one graph per line.
    File(PathBuf),
    Random { family: RandomFamily, count: usize, seed: u64 },
    Gadget { name: String, k: Option<i64> },
}

/// One or more sources, concatenated in order, then filtered.
///
/// Text form: sources joined by `+`, optionally followed by `@` and a
/// comma-separated filter list, e.g. `exhaustive:6+file:g.g6@chordal,dh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub sources: Vec<CorpusSource>,
    pub filters: Vec<ClassFilter>,
}

impl CorpusSpec {
    pub fn new(sources: Vec<CorpusSource>) -> Self {
        CorpusSpec { sources, filters: Vec::new() }
    }

    pub fn exhaustive(max_n: usize) -> Self {
        Self::new(vec![CorpusSource::Exhaustive(max_n)])
    }

    pub fn with_filter(mut self, f: ClassFilter) -> Self {
        self.filters.push(f);
        self
    }
}

fn parse_source(text: &str) -> Result<CorpusSource> {
    let bad = |why: &str| DomError::InvalidConfig(format!("corpus `{text}`: {why}"));
    let (kind, rest) = text.split_once(':').ok_or_else(|| bad("expected KIND:ARGS"))?;
    match kind {
        "exhaustive" => Ok(CorpusSource::Exhaustive(rest.parse().map_err(|_| bad("expected exhaustive:N"))?)),
        "file" if !rest.is_empty() => Ok(CorpusSource::File(PathBuf::from(rest))),
        "random" => {
            let parts: Vec<&str> = rest.split(':').collect();
            let [family, count, seed] = parts[..] else {
                return Err(bad("expected random:FAMILY:COUNT:SEED"));
            };
            Ok(CorpusSource::Random {
                family: family.parse()?,
                count: count.parse().map_err(|_| bad("count is not an integer"))?,
                seed: seed.parse().map_err(|_| bad("seed is not an integer"))?,
            })
        }
        "gadget" => {
            let (name, k) = match rest.rsplit_once(':') {
                Some((name, k)) if k.parse::<i64>().is_ok() => (name, Some(k.parse().expect("checked"))),
                _ => (rest, None),
            };
            Ok(CorpusSource::Gadget { name: name.to_string(), k })
        }
        _ => Err(bad("unknown corpus kind")),
    }
}

impl FromStr for CorpusSpec {
    type Err = DomError;

    fn from_str(s: &str) -> Result<Self> {
        let (sources, filters) = match s.rsplit_once('@') {
            Some((src, f)) => (src, f.split(',').map(str::parse).collect::<Result<Vec<_>>>()?),
            None => (s, Vec::new()),
        };
        let sources = sources.split('+').map(parse_source).collect::<Result<Vec<_>>>()?;
        Ok(CorpusSpec { sources, filters })
    }
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSource::Exhaustive(n) => write!(f, "exhaustive:{n}"),
            CorpusSource::File(p) => write!(f, "file:{}", p.display()),
            CorpusSource::Random { family, count, seed } => write!(f, "random:{}:{count}:{seed}", family.name()),
            CorpusSource::Gadget { name, k: Some(k) } => write!(f, "gadget:{name}:{k}"),
            CorpusSource::Gadget { name, k: None } => write!(f, "gadget:{name}"),
        }
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sources: Vec<String> = self.sources.iter().map(ToString::to_string).collect();
        f.write_str(&sources.join("+"))?;
        if !self.filters.is_empty() {
            let names: Vec<&str> = self.filters.iter().map(|c| c.name()).collect();
            write!(f, "@{}", names.join(","))?;
        }
        Ok(())
    }
}

/// A corpus graph with where it came from.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub label: String,
    pub graph: Graph,
    pub gadget: Option<GadgetDescriptor>,
}

/// All labelled connected graphs of order `n`, by increasing edge mask over
/// the pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn labeled_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > EXHAUSTIVE_LIMIT {
        return Err(DomError::ParameterOutOfRange(format!("exhaustive order must be in 1..={EXHAUSTIVE_LIMIT}, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let graphs: Vec<Graph> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edge_list(n, &edges).expect("valid pairs");
            is_connected(&g).then_some(g)
        })
        .collect();
    Ok(graphs)
}

fn expand_source(source: &CorpusSource, tier: Tier) -> Result<Vec<CorpusItem>> {
    let tag = source.to_string();
    let plain = |i: usize, graph: Graph| CorpusItem { label: format!("{tag}#{i}"), graph, gadget: None };
    match source {
        CorpusSource::Exhaustive(max_n) => {
            let mut out = Vec::new();
            for n in 1..=*max_n {
                out.extend(labeled_connected_graphs(n)?);
            }
            Ok(out.into_iter().enumerate().map(|(i, g)| plain(i, g)).collect())
        }
        CorpusSource::File(path) => {
            let file = File::open(path).map_err(|e| DomError::CorpusRead(format!("{}: {e}", path.display())))?;
            let graphs = read_graph6_lines(BufReader::new(file), tier)
                .map_err(|e| DomError::CorpusRead(format!("{}: {e}", path.display())))?;
            Ok(graphs.into_iter().enumerate().map(|(i, g)| plain(i, g)).collect())
        }
        CorpusSource::Random { family, count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count).map(|i| Ok(plain(i, family.sample(&mut rng)?))).collect()
        }
        CorpusSource::Gadget { name, k } => {
            let d = gadget_by_name(name, *k, 0, None)?;
            Ok(vec![CorpusItem { label: tag, graph: d.graph.clone(), gadget: Some(d) }])
        }
    }
}

/// Materializes the corpus in source order; filters keep original labels.
pub fn expand(spec: &CorpusSpec) -> Result<Vec<CorpusItem>> {
    let tier = Tier::from_env()?;
    let mut items = Vec::new();
    for source in &spec.sources {
        items.extend(expand_source(source, tier)?);
    }
    if spec.filters.is_empty() {
        return Ok(items);
    }
    let keep: Vec<bool> = items.par_iter().map(|it| spec.filters.iter().all(|f| f.accepts(&it.graph))).collect();
    Ok(items.into_iter().zip(keep).filter_map(|(it, k)| k.then_some(it)).collect())
}

/// Applies `f` to every corpus graph in parallel; results come back in
/// corpus order whatever the scheduling.
pub fn corpus_scan<T: Send>(spec: &CorpusSpec, f: impl Fn(&CorpusItem) -> T + Sync + Send) -> Result<Vec<(CorpusItem, T)>> {
    let items = expand(spec)?;
    let results: Vec<T> = items.par_iter().map(&f).collect();
    Ok(items.into_iter().zip(results).collect())
}
