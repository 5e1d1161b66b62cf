//! Isomorphism classes of self-maps `κ: {0..n} → {0..n}` ("types").
//!
//! A functional graph is a disjoint union of components, each a cycle (a
//! self-loop counts as a cycle of length 1) with rooted trees hanging off
//! its vertices. The canonical code encodes every tree by the sorted codes
//! of its subtrees, every component by the least rotation of its cycle, and
//! the graph by the sorted list of its components.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `n` for which types are enumerated.
pub const MAX_TYPE_VARS: usize = 8;

/// One isomorphism class of maps `κ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeClass {
    pub n: usize,
    /// Position in [`enumerate_types`] order.
    pub index: usize,
    /// Canonical code; equal iff the maps are conjugate under relabeling.
    pub code: String,
    /// Roman numeral for `n ≤ 4`, `T<n>.<index+1>` beyond.
    pub label: String,
    /// A map of this type, 0-based.
    pub representative: Vec<usize>,
}

impl TypeClass {
    pub fn is_fcc(&self) -> bool {
        super::is_fcc_map(&self.representative)
    }
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// Vertices lying on a cycle of `kappa` (including fixed points).
pub(crate) fn cycle_vertices(kappa: &[usize]) -> Vec<bool> {
    let n = kappa.len();
    (0..n)
        .map(|v| {
            let mut x = kappa[v];
            for _ in 0..n {
                if x == v {
                    return true;
                }
                x = kappa[x];
            }
            false
        })
        .collect()
}

/// Cycles of `kappa` in arrow order, each starting at its least vertex.
pub(crate) fn cycles(kappa: &[usize]) -> Vec<Vec<usize>> {
    let on_cycle = cycle_vertices(kappa);
    let mut seen = vec![false; kappa.len()];
    let mut out = Vec::new();
    for v in 0..kappa.len() {
        if on_cycle[v] && !seen[v] {
            let mut cyc = vec![v];
            seen[v] = true;
            let mut x = kappa[v];
            while x != v {
                seen[x] = true;
                cyc.push(x);
                x = kappa[x];
            }
            out.push(cyc);
        }
    }
    out
}

/// Canonical code of the functional graph of `kappa`.
pub fn canonical_code(kappa: &[usize]) -> String {
    let n = kappa.len();
    let on_cycle = cycle_vertices(kappa);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        if !on_cycle[u] {
            children[kappa[u]].push(u);
        }
    }
    fn tree_code(v: usize, children: &[Vec<usize>]) -> String {
        let mut subs: Vec<String> = children[v].iter().map(|&c| tree_code(c, children)).collect();
        subs.sort();
        format!("({})", subs.concat())
    }
    let mut comps: Vec<String> = cycles(kappa)
        .into_iter()
        .map(|cyc| {
            let codes: Vec<String> = cyc.iter().map(|&c| tree_code(c, &children)).collect();
            let best = (0..codes.len())
                .map(|r| codes[r..].iter().chain(&codes[..r]).cloned().collect::<Vec<_>>())
                .min()
                .expect("nonempty cycle");
            format!("[{}]", best.concat())
        })
        .collect();
    comps.sort();
    comps.concat()
}

/// Roman-numeral numbering for `n ≤ 4`, given by one 1-based map per label.
/// `n = 2, 3` follow the classical ordering; `n = 4` is pinned so that the
/// failing index sets of the non-FCC types and the even-cycle types land on
/// the numbers annotated in the classical table.
const LABELED: &[(usize, &str, &[usize])] = &[
    (1, "I", &[1]),
    (2, "I", &[1, 2]),
    (2, "II", &[1, 1]),
    (2, "III", &[2, 1]),
    (3, "I", &[1, 2, 3]),
    (3, "II", &[1, 1, 3]),
    (3, "III", &[1, 1, 1]),
    (3, "IV", &[2, 1, 3]),
    (3, "V", &[1, 1, 2]),
    (3, "VI", &[2, 1, 1]),
    (3, "VII", &[2, 3, 1]),
    (4, "I", &[1, 2, 3, 4]),
    (4, "II", &[1, 1, 3, 4]),
    (4, "III", &[2, 1, 3, 4]),
    (4, "IV", &[1, 1, 3, 3]),
    (4, "V", &[1, 2, 1, 1]),
    (4, "VI", &[1, 1, 2, 4]),
    (4, "VII", &[2, 3, 1, 4]),
    (4, "VIII", &[2, 1, 3, 1]),
    (4, "IX", &[1, 1, 4, 3]),
    (4, "X", &[1, 1, 2, 3]),
    (4, "XI", &[1, 1, 2, 2]),
    (4, "XII", &[1, 1, 2, 1]),
    (4, "XIII", &[1, 1, 1, 1]),
    (4, "XIV", &[2, 1, 4, 3]),
    (4, "XV", &[2, 3, 1, 3]),
    (4, "XVI", &[2, 1, 2, 3]),
    (4, "XVII", &[2, 1, 2, 1]),
    (4, "XVIII", &[2, 3, 4, 1]),
    (4, "XIX", &[2, 1, 1, 1]),
];

struct TypeTable {
    types: Vec<TypeClass>,
    by_code: HashMap<String, usize>,
}

fn build_table(n: usize) -> TypeTable {
    // First map (in lexicographic order) seen for every code.
    let mut reps: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let total = n.pow(n as u32);
    let mut kappa = vec![0usize; n];
    for _ in 0..total {
        reps.entry(canonical_code(&kappa)).or_insert_with(|| kappa.clone());
        for slot in kappa.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    let mut types: Vec<TypeClass> = if n <= 4 {
        LABELED
            .iter()
            .filter(|(m, _, _)| *m == n)
            .map(|(_, label, one_based)| {
                let rep: Vec<usize> = one_based.iter().map(|x| x - 1).collect();
                TypeClass {
                    n,
                    index: 0,
                    code: canonical_code(&rep),
                    label: (*label).to_string(),
                    representative: rep,
                }
            })
            .collect()
    } else {
        reps.iter()
            .map(|(code, rep)| TypeClass {
                n,
                index: 0,
                code: code.clone(),
                label: String::new(),
                representative: rep.clone(),
            })
            .collect()
    };
    assert_eq!(types.len(), reps.len(), "label table out of sync for n = {n}");
    for (i, t) in types.iter_mut().enumerate() {
        t.index = i;
        if n > 4 {
            t.label = format!("T{n}.{}", i + 1);
        }
    }
    let by_code = types.iter().map(|t| (t.code.clone(), t.index)).collect();
    TypeTable { types, by_code }
}

fn table(n: usize) -> Result<&'static TypeTable> {
    static TABLES: [OnceLock<TypeTable>; MAX_TYPE_VARS + 1] = [const { OnceLock::new() }; MAX_TYPE_VARS + 1];
    if n == 0 || n > MAX_TYPE_VARS {
        return Err(Error::PreconditionViolated(format!(
            "types are enumerated for 1 <= n <= {MAX_TYPE_VARS}, got {n}"
        )));
    }
    Ok(TABLES[n].get_or_init(|| build_table(n)))
}

/// All types of maps on `n` vertices, in a fixed canonical order (Roman
/// numeral order for `n ≤ 4`, code order beyond).
pub fn enumerate_types(n: usize) -> Result<&'static [TypeClass]> {
    Ok(&table(n)?.types)
}

/// The type of a concrete map.
pub fn type_of(kappa: &[usize]) -> Result<&'static TypeClass> {
    let t = table(kappa.len())?;
    let idx = t.by_code[&canonical_code(kappa)];
    Ok(&t.types[idx])
}

/// `κ(0) = 0`, `κ(i) = i - 1`: the chain on `n` vertices.
pub fn chain_map(n: usize) -> Vec<usize> {
    (0..n).map(|i| i.saturating_sub(1)).collect()
}

pub fn is_chain_map(kappa: &[usize]) -> bool {
    canonical_code(kappa) == canonical_code(&chain_map(kappa.len()))
}
