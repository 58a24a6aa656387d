//! Special bracketings: a bracketing of an ALSW `w` in which a chosen ALSW
//! subword appears as its own subtree while the leading word stays `w`.

use super::alsw::{is_alsw, lyndon_factorize};
use super::tree::{std_unchecked, LieTree, Side};
use super::word::XWord;
use super::LyndonError;

/// A bracketing together with the paths of its marked subtrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTree {
    pub tree: LieTree,
    pub marks: Vec<Vec<Side>>,
}

impl MarkedTree {
    pub fn marked(&self, i: usize) -> &LieTree {
        self.tree.at(&self.marks[i]).expect("mark paths stay inside the tree")
    }
}

fn check_alsw(w: &[u32]) -> Result<(), LyndonError> {
    if is_alsw(w) {
        Ok(())
    } else {
        Err(LyndonError::NotAlsw(XWord::from(w)))
    }
}

fn check_at(w: &[u32], u: &[u32], pos: usize) -> Result<(), LyndonError> {
    if pos + u.len() <= w.len() && &w[pos..pos + u.len()] == u {
        Ok(())
    } else {
        Err(LyndonError::NotSubwordAt {
            word: XWord::from(w),
            sub: XWord::from(u),
            pos,
        })
    }
}

/// Where `[uc]` sits inside `[w]`: its path, its start offset and its length.
struct UcSite {
    path: Vec<Side>,
    start: usize,
    len: usize,
}

fn uc_site(std_w: &LieTree, pos: usize, ulen: usize) -> Result<UcSite, LyndonError> {
    let (path, start) = std_w.covering_subtree(pos, pos + ulen);
    if start != pos {
        return Err(LyndonError::InvalidContext);
    }
    let len = std_w.at(&path).expect("path from covering_subtree").len();
    Ok(UcSite { path, start, len })
}

/// Left-normed chain `[...[[u][c1]]...[cn]]`; returns it with the path of `[u]`.
fn chain(u_tree: LieTree, factors: &[XWord]) -> (LieTree, Vec<Side>) {
    let mut t = u_tree;
    for c in factors {
        t = LieTree::node(t, std_unchecked(c));
    }
    (t, vec![Side::Left; factors.len()])
}

/// Special bracketing of `w` relative to the occurrence of `u` at `position`.
pub fn special_bracketing(w: &[u32], u: &[u32], position: usize) -> Result<MarkedTree, LyndonError> {
    check_alsw(w)?;
    check_alsw(u)?;
    check_at(w, u, position)?;
    let mut tree = std_unchecked(w);
    let site = uc_site(&tree, position, u.len())?;
    let c = &w[position + u.len()..site.start + site.len];
    let (sub, inner) = chain(std_unchecked(u), &lyndon_factorize(c));
    tree.replace(&site.path, sub);
    let mut mark = site.path;
    mark.extend(inner);
    Ok(MarkedTree {
        tree,
        marks: vec![mark],
    })
}

/// The NLSW `[uc]` read as `[u[c1]...[cn]]` with `c = c1...cn` the Lyndon
/// factorization: every `[ci]` is a subtree of `[uc]`. The prefix `u` itself
/// need not be one (`[x2,[[x2,x1],x1]]` for `u = x2x2x1`, `c = x1`).
pub fn chibrikov_bracketing(u: &[u32], c: &[u32]) -> Result<LieTree, LyndonError> {
    let uc = XWord::concat3(u, c, &[]);
    if !is_alsw(u) || !is_alsw(&uc) {
        return Err(LyndonError::InvalidContext);
    }
    let tree = std_unchecked(&uc);
    let mut blocks = Vec::new();
    let mut off = u.len();
    for f in lyndon_factorize(c) {
        blocks.push((off, f.len()));
        off += f.len();
    }
    for (start, len) in blocks {
        let (path, s) = tree.covering_subtree(start, start + len);
        if s != start || tree.at(&path).map(LieTree::len) != Some(len) {
            return Err(LyndonError::InvalidContext);
        }
    }
    Ok(tree)
}

/// Bracketing of `w` with both the `u` occurrence at `u_pos` and the `v`
/// occurrence at `v_pos` as marked subtrees (marks in that order).
pub fn double_bracketing(
    w: &[u32],
    u: &[u32],
    u_pos: usize,
    v: &[u32],
    v_pos: usize,
) -> Result<MarkedTree, LyndonError> {
    if v_pos < u_pos {
        let mut t = double_bracketing(w, v, v_pos, u, u_pos)?;
        t.marks.swap(0, 1);
        return Ok(t);
    }
    check_alsw(w)?;
    check_alsw(u)?;
    check_alsw(v)?;
    check_at(w, u, u_pos)?;
    check_at(w, v, v_pos)?;
    if u_pos + u.len() > v_pos {
        return Err(LyndonError::OccurrencesOverlap);
    }
    let std_w = std_unchecked(w);
    let su = uc_site(&std_w, u_pos, u.len())?;
    let c = &w[u_pos + u.len()..su.start + su.len];
    let factors = lyndon_factorize(c);

    if v_pos >= su.start + su.len {
        // Disjoint subtrees [uc] and [vs]; bracket each independently.
        let sv = uc_site(&std_w, v_pos, v.len())?;
        let d = &w[v_pos + v.len()..sv.start + sv.len];
        let mut tree = std_w;
        let (tu, iu) = chain(std_unchecked(u), &factors);
        let (tv, iv) = chain(std_unchecked(v), &lyndon_factorize(d));
        tree.replace(&su.path, tu);
        tree.replace(&sv.path, tv);
        let mut mu = su.path;
        mu.extend(iu);
        let mut mv = sv.path;
        mv.extend(iv);
        return Ok(MarkedTree {
            tree,
            marks: vec![mu, mv],
        });
    }

    // v lies inside c, hence inside a single Lyndon factor c_t.
    let mut off = u_pos + u.len();
    let mut target = None;
    for (t, f) in factors.iter().enumerate() {
        if v_pos >= off && v_pos + v.len() <= off + f.len() {
            target = Some((t, off));
            break;
        }
        off += f.len();
    }
    let (t, off_t) = target.ok_or(LyndonError::InvalidContext)?;
    let inner_v = special_bracketing(&factors[t], v, v_pos - off_t)?;
    let mut sub = std_unchecked(u);
    for (i, f) in factors.iter().enumerate() {
        let right = if i == t {
            inner_v.tree.clone()
        } else {
            std_unchecked(f)
        };
        sub = LieTree::node(sub, right);
    }
    let n = factors.len();
    let mut tree = std_w;
    tree.replace(&su.path, sub);
    let mut mu = su.path.clone();
    mu.extend(std::iter::repeat_n(Side::Left, n));
    let mut mv = su.path;
    mv.extend(std::iter::repeat_n(Side::Left, n - 1 - t));
    mv.push(Side::Right);
    mv.extend(inner_v.marks[0].iter().copied());
    Ok(MarkedTree {
        tree,
        marks: vec![mu, mv],
    })
}
