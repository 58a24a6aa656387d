//! Integer structure constants of the free Lie ring in the Lyndon–Shirshov
//! basis, computed by associative expansion and triangular peeling and
//! memoized process-wide.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::lyndon::{is_alsw, std_split, XWord};

/// Sparse integer combination of words, sorted increasingly.
pub type IntComb = Arc<[(XWord, i64)]>;

type Cache<K> = OnceLock<RwLock<HashMap<K, IntComb>>>;

static EXPANSIONS: Cache<XWord> = OnceLock::new();
static BRACKETS: Cache<(XWord, XWord)> = OnceLock::new();

fn cached<K: std::hash::Hash + Eq + Clone>(
    cache: &'static Cache<K>,
    key: &K,
    compute: impl FnOnce() -> IntComb,
) -> IntComb {
    let lock = cache.get_or_init(Default::default);
    if let Some(v) = lock.read().expect("cache lock").get(key) {
        return v.clone();
    }
    let v = compute();
    lock.write()
        .expect("cache lock")
        .entry(key.clone())
        .or_insert(v)
        .clone()
}

fn commutator(a: &[(XWord, i64)], b: &[(XWord, i64)]) -> BTreeMap<XWord, i64> {
    let mut out = BTreeMap::new();
    for (u, cu) in a {
        for (v, cv) in b {
            *out.entry(u.concat(v)).or_insert(0) += cu * cv;
            *out.entry(v.concat(u)).or_insert(0) -= cu * cv;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Associative expansion of the NLSW `[w]`; `w` must be an ALSW.
pub fn expansion(w: &XWord) -> IntComb {
    cached(&EXPANSIONS, w, || {
        debug_assert!(is_alsw(w));
        match std_split(w) {
            None => Arc::from(vec![(w.clone(), 1)]),
            Some(k) => {
                let (u, v) = (w.slice(0, k), w.slice(k, w.len()));
                commutator(&expansion(&u), &expansion(&v)).into_iter().collect()
            }
        }
    })
}

/// Rewrites an integer associative polynomial lying in the free Lie ring as a
/// combination of NLSWs (keyed by foliage). Fails if some leading word on the
/// way is not an ALSW.
pub fn peel(mut p: BTreeMap<XWord, i64>) -> Result<Vec<(XWord, i64)>, XWord> {
    let mut out = Vec::new();
    while let Some((w, c)) = p.iter().next_back().map(|(w, c)| (w.clone(), *c)) {
        if !is_alsw(&w) {
            return Err(w);
        }
        for (u, k) in expansion(&w).iter() {
            let e = p.entry(u.clone()).or_insert(0);
            *e -= c * k;
            if *e == 0 {
                p.remove(u);
            }
        }
        out.push((w, c));
    }
    out.sort();
    Ok(out)
}

/// `[[u],[v]]` in the NLSW basis, for ALSWs `u` and `v`.
pub fn bracket_words(u: &XWord, v: &XWord) -> IntComb {
    if u == v {
        return Arc::from(Vec::new());
    }
    if u < v {
        let r = bracket_words(v, u);
        return r.iter().map(|(w, c)| (w.clone(), -c)).collect();
    }
    cached(&BRACKETS, &(u.clone(), v.clone()), || {
        // [[u],[v]] is already an NLSW exactly when [uv] splits as (u, v); the
        // order (u, v) or (v, u) of concatenation is tried both ways.
        let uv = u.concat(v);
        if is_alsw(&uv) && std_split(&uv) == Some(u.len()) {
            return Arc::from(vec![(uv, 1)]);
        }
        let vu = v.concat(u);
        if is_alsw(&vu) && std_split(&vu) == Some(v.len()) {
            return Arc::from(vec![(vu, -1)]);
        }
        let p = commutator(&expansion(u), &expansion(v));
        Arc::from(peel(p).expect("a commutator of Lie elements is a Lie element"))
    })
}
