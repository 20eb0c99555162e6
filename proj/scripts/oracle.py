#!/usr/bin/env python3
"""Independent brute-force oracle for the fixture corpus.

Computes, from first principles and with no shared code with the C++
library, every derived quantity the test suite asserts: predimensions,
dimensions, intrinsic closures, automorphism groups and their orbits,
fixed-point traces, good-pair catalogs, disjoint-copy counts, flower
petals and certificates, decomposition chains and strata, and the
definable-closure verdict ingredients.  Results are frozen into
oracle_out/expected.json; the C++ tests carry the same numbers as
literals.

Run:  python3 scripts/oracle.py
"""

import itertools
import json
import os
import sys
from collections import defaultdict

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
FIXDIR = os.path.join(HERE, "..", "fixtures")
OUTDIR = os.path.join(HERE, "oracle_out")

POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int8)


# ----------------------------------------------------------------------------
# parsing


class Struct:
    def __init__(self, flavor, names, triples, base):
        self.flavor = flavor              # "hypergraph" | "linear"
        self.names = names                # list[str]
        self.index = {p: i for i, p in enumerate(names)}
        self.n = len(names)
        self.triples = triples            # list[frozenset[int]]
        self.tmasks = [sum(1 << p for p in t) for t in triples]
        self.base = base                  # list[int] (ordered)
        self.base_mask = sum(1 << p for p in base)
        if flavor == "linear":
            self.full_lines = self._extract_lines(
                (1 << self.n) - 1)        # list[int] masks
            self.line_masks = np.array(self.full_lines, dtype=np.int64)

    def _extract_lines(self, mask):
        """Maximal relation-cliques of size >= 3 inside mask."""
        tris = [t for t in self.tmasks if t & mask == t]
        lines = set()
        for t in tris:
            pts = [p for p in range(self.n) if (t >> p) & 1]
            for p, q in itertools.combinations(pts, 2):
                ln = (1 << p) | (1 << q)
                for r in range(self.n):
                    if r in (p, q) or not (mask >> r) & 1:
                        continue
                    if ((1 << p) | (1 << q) | (1 << r)) in set(self.tmasks):
                        ln |= 1 << r
                # verify clique: every 3-subset present
                lp = [u for u in range(self.n) if (ln >> u) & 1]
                ok = all(
                    sum(1 << a for a in c) in set(self.tmasks)
                    for c in itertools.combinations(lp, 3))
                if ok and bin(ln).count("1") >= 3:
                    lines.add(ln)
        # keep only maximal
        out = [l for l in lines
               if not any(o != l and o & l == l for o in lines)]
        return sorted(out)

    def mask_of(self, pts):
        return sum(1 << self.index[p] for p in pts)

    def set_of(self, mask):
        return sorted(self.names[i] for i in range(self.n) if (mask >> i) & 1)


def parse_struct(path):
    flavor, names, base = None, [], []
    triples, seen = [], set()
    for line in open(path):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        toks = rest.split()
        if key == "flavor":
            flavor = toks[0]
        elif key == "points":
            names = toks
        elif key == "rel":
            idx = frozenset(names.index(t) for t in toks)
            assert len(idx) == 3, f"bad rel {toks}"
            assert idx not in seen, f"duplicate rel {toks}"
            seen.add(idx)
            triples.append(idx)
        elif key == "base":
            base = [names.index(t) for t in toks]
    s = Struct(flavor, names, triples, base)
    if flavor == "linear":
        # two points determine at most one line
        for l1, l2 in itertools.combinations(s.full_lines, 2):
            assert bin(l1 & l2).count("1") <= 1, "linear axiom violated"
    return s


def parse_mu(path):
    alpha, default = None, ("delta", 0)
    for line in open(path):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        rest = rest.strip()
        if key == "alpha":
            alpha = int(rest)
        elif key == "default":
            if rest == "delta":
                default = ("delta", 0)
            else:
                assert rest.startswith("delta+")
                default = ("delta", int(rest[6:]))
    return alpha, default


# ----------------------------------------------------------------------------
# predimension


def delta(s, mask):
    npts = bin(mask).count("1")
    if s.flavor == "hypergraph":
        return npts - sum(1 for t in s.tmasks if t & mask == t)
    tot = 0
    for ln in s.full_lines:
        k = bin(ln & mask).count("1")
        if k >= 3:
            tot += k - 2
    return npts - tot


def delta_table(s):
    """np.int8 delta over all 2^n masks (n <= 26)."""
    n = s.n
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    pc = POP16[masks & 0xFFFF] + POP16[masks >> 16]
    d = pc.astype(np.int16)
    if s.flavor == "hypergraph":
        for t in s.tmasks:
            d -= ((masks & t) == t).astype(np.int16)
    else:
        for ln in s.full_lines:
            k = POP16[(masks & ln) & 0xFFFF] + POP16[(masks & ln) >> 16]
            contrib = np.maximum(k.astype(np.int16) - 2, 0)
            contrib[k < 3] = 0
            d -= contrib
    return d, masks


class Dim:
    """dim / icl / acl-trace queries answered from a full delta table."""

    def __init__(self, s):
        self.s = s
        self.d, self.masks = delta_table(s)

    def dim(self, xmask):
        sel = (self.masks & xmask) == xmask
        return int(self.d[sel].min())

    def icl(self, xmask):
        sel = (self.masks & xmask) == xmask
        vals = self.d[sel]
        m = vals.min()
        achievers = self.masks[sel][vals == m]
        inter = int(achievers[0])
        for a in achievers[1:]:
            inter &= int(a)
        # the intersection of all minimum-delta supersets must itself achieve
        assert delta(self.s, inter) == m, "icl not unique-minimal"
        return inter

    def acl_trace(self, xmask):
        base = self.dim(xmask)
        out = 0
        for p in range(self.s.n):
            if self.dim(xmask | (1 << p)) == base:
                out |= 1 << p
        return out


def is_strong(s, dimq, xmask):
    return delta(s, xmask) == dimq.dim(xmask)


# ----------------------------------------------------------------------------
# embeddings / automorphisms (induced-substructure maps)


def embeddings(src, dst, fixed=None, setwise=None):
    """All injective maps src->dst preserving the ternary relation both ways
    on the image (induced embeddings).  `fixed` maps src index -> dst index;
    `setwise` restricts the image of each src point in its key set to the
    paired dst set.  Returns list of tuples (dst index per src index)."""
    ns, nd = src.n, dst.n
    sT = set(src.tmasks)
    dT = set(dst.tmasks)
    same = src is dst
    # adjacency: for each src point, triples containing it
    stri = [[t for t in src.triples if p in t] for p in range(ns)]
    dtri_count = [sum(1 for t in dst.triples if q in t) for q in range(nd)]
    fixed = fixed or {}
    # connectivity-aware order: fixed points first, then greedily the point
    # sharing the most triples with already-ordered ones (ties: degree, index)
    order = sorted(fixed.keys())
    placed_set = set(order)
    while len(order) < ns:
        best, bestkey = None, None
        for p in range(ns):
            if p in placed_set:
                continue
            link = sum(1 for t in stri[p]
                       if sum(1 for u in t if u in placed_set) == 2)
            key = (link, len(stri[p]), -p)
            if bestkey is None or key > bestkey:
                best, bestkey = p, key
        order.append(best)
        placed_set.add(best)
    out = []
    img = [-1] * ns
    used = [False] * nd

    def candidates(p):
        if p in fixed:
            return [fixed[p]]
        if setwise:
            for sset, dset in setwise:
                if p in sset:
                    return sorted(dset)
        return range(nd)

    def degree_ok(p, q):
        if same:
            return len(stri[p]) == dtri_count[q]
        return len(stri[p]) <= dtri_count[q]

    def ok(p, q, pos):
        placed = order[:pos]
        for t in stri[p]:
            rest = [u for u in t if u != p]
            if all(img[u] >= 0 for u in rest):
                tm = (1 << q) | (1 << img[rest[0]]) | (1 << img[rest[1]])
                if tm not in dT:
                    return False
        # induced: no dst triple among image that is not a src triple
        for u1, u2 in itertools.combinations(placed, 2):
            tm = (1 << q) | (1 << img[u1]) | (1 << img[u2])
            if tm in dT:
                sm = (1 << p) | (1 << u1) | (1 << u2)
                if sm not in sT:
                    return False
        return True

    def rec(pos):
        if pos == ns:
            out.append(tuple(img))
            return
        p = order[pos]
        for q in candidates(p):
            if used[q] or not degree_ok(p, q):
                continue
            if ok(p, q, pos):
                img[p] = q
                used[q] = True
                rec(pos + 1)
                used[q] = False
                img[p] = -1

    rec(0)
    return out


def automorphisms(s, pointwise=(), setwise_sets=()):
    fixed = {p: p for p in pointwise}
    sw = [(set(ss), set(ss)) for ss in setwise_sets]
    return embeddings(s, s, fixed=fixed, setwise=sw)


def orbits_of(s, perms):
    parent = list(range(s.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in perms:
        for p in range(s.n):
            ra, rb = find(p), find(g[p])
            if ra != rb:
                parent[ra] = rb
    groups = defaultdict(list)
    for p in range(s.n):
        groups[find(p)].append(p)
    return sorted(sorted(v) for v in groups.values())


def fixed_points(s, perms):
    return [p for p in range(s.n) if all(g[p] == p for g in perms)]


# ----------------------------------------------------------------------------
# good pairs


def induced(s, mask):
    pts = [i for i in range(s.n) if (mask >> i) & 1]
    names = [s.names[i] for i in pts]
    remap = {old: new for new, old in enumerate(pts)}
    triples = [frozenset(remap[p] for p in t) for t in s.triples
               if all(p in remap for p in t)]
    return Struct(s.flavor, names, triples, []), remap


def rel_delta(s, amask, bmask):
    return delta(s, amask | bmask) - delta(s, bmask)


def strong_within(s, small, big):
    """small <= big inside the induced substructure on big."""
    extra = big & ~small
    sub = extra
    while True:
        if delta(s, small | sub) < delta(s, small):
            return False
        if sub == 0:
            break
        sub = (sub - 1) & extra
    return True


def zero_primitive(s, amask, dmask):
    assert amask & dmask == 0
    if rel_delta(s, amask, dmask) != 0:
        return False
    if not strong_within(s, dmask, dmask | amask):
        return False
    # no proper nonempty A0 with D <= D|A0 <= D|A
    sub = amask
    while True:
        sub = (sub - 1) & amask
        if sub == 0:
            break
        if (strong_within(s, dmask, dmask | sub)
                and strong_within(s, dmask | sub, dmask | amask)):
            return False
    return True


def find_base(s, amask, dmask):
    if s.flavor == "hypergraph":
        b = 0
        for t in s.tmasks:
            if t & amask and (t & ~(amask | dmask)) == 0:
                b |= t & dmask
        return b
    # linear: points of D on a line with >= 2 points of A
    apts = bin(amask).count("1")
    if apts >= 2:
        b = 0
        for ln in s._extract_lines(amask | dmask):
            if bin(ln & amask).count("1") >= 2:
                b |= ln & dmask
        return b
    # single alpha point: unique line with >= 2 D-points
    lines = [ln for ln in s._extract_lines(amask | dmask)
             if ln & amask and bin(ln & dmask).count("1") >= 2]
    assert len(lines) == 1, "alpha point must sit on a unique supporting line"
    ext = lines[0] & dmask
    pts = sorted((i for i in range(s.n) if (ext >> i) & 1),
                 key=lambda i: s.names[i])
    return (1 << pts[0]) | (1 << pts[1]), ext


def good_pairs(s, max_ext):
    """(amask, bmask) for every good pair with A <= max_ext points, where
    the ambient D is the complement of A."""
    full = (1 << s.n) - 1
    out = []
    for k in range(1, max_ext + 1):
        for combo in itertools.combinations(range(s.n), k):
            amask = sum(1 << p for p in combo)
            dmask = full & ~amask
            if not zero_primitive(s, amask, dmask):
                continue
            fb = find_base(s, amask, dmask)
            bmask = fb[0] if isinstance(fb, tuple) else fb
            # goodness: every base point related into A (hypergraph);
            # delta(A/B) must be 0 over the base itself
            if rel_delta(s, amask, bmask) != 0:
                continue
            if not zero_primitive(s, amask, bmask):
                continue
            out.append((amask, bmask))
    return out


def mu_value(s, alpha, default, amask, bmask):
    if bin(amask).count("1") == 1 and alpha is not None:
        # alpha pair: single point, one triple with the base pair
        if s.flavor == "linear":
            return alpha
        if len([t for t in s.tmasks if t & amask]) >= 1 and \
                bin(bmask).count("1") == 2:
            return alpha
    kind, k = default
    return delta(s, bmask) + k


def chi(s, amask, bmask):
    """Max number of pairwise disjoint images of A over pointwise-fixed B."""
    return len(max_disjoint(copies_of(s, amask, bmask)))


def copies_of(s, amask, bmask):
    sub, remap = induced(s, amask | bmask)
    fixed = {remap[p]: p for p in range(s.n) if (bmask >> p) & 1}
    embs = embeddings(sub, s, fixed=fixed)
    images = set()
    inv = {v: k for k, v in remap.items()}
    apts = [remap[p] for p in range(s.n) if (amask >> p) & 1]
    for e in embs:
        images.add(sum(1 << e[p] for p in apts))
    return sorted(images)


def max_disjoint(sets):
    best = []

    def rec(i, cur, curmask):
        nonlocal best
        if len(cur) + len(sets) - i <= len(best):
            return
        if i == len(sets):
            if len(cur) > len(best):
                best = list(cur)
            return
        if not (sets[i] & curmask):
            cur.append(sets[i])
            rec(i + 1, cur, curmask | sets[i])
            cur.pop()
        rec(i + 1, cur, curmask)

    rec(0, [], 0)
    return best


def maximal_disjoint_families(sets):
    """All inclusion-maximal pairwise-disjoint subfamilies."""
    out = []

    def rec(i, cur, curmask):
        if i == len(sets):
            # maximal: no unused set disjoint from cur
            for sset in sets:
                if sset not in cur and not (sset & curmask):
                    return
            out.append(tuple(cur))
            return
        if not (sets[i] & curmask):
            cur.append(sets[i])
            rec(i + 1, cur, curmask | sets[i])
            cur.pop()
        rec(i + 1, cur, curmask)

    rec(0, [], 0)
    return sorted(set(out))


def in_lmu(s, alpha, default, max_ext):
    viol = []
    for amask, bmask in good_pairs(s, max_ext):
        c = chi(s, amask, bmask)
        m = mu_value(s, alpha, default, amask, bmask)
        if c > m:
            viol.append((s.set_of(amask), s.set_of(bmask), c, m))
    return viol


# ----------------------------------------------------------------------------
# decomposition


def chain_decompose(s, dimq):
    """Canonical chain of 0-primitive steps from the base: at each step the
    smallest (then lexicographically least) 0-primitive extension."""
    cur = s.base_mask
    full = (1 << s.n) - 1
    steps = []
    while cur != full:
        rest = [p for p in range(s.n) if not (cur >> p) & 1]
        found = None
        for k in range(1, len(rest) + 1):
            cands = []
            for combo in itertools.combinations(rest, k):
                amask = sum(1 << p for p in combo)
                if rel_delta(s, amask, cur) != 0:
                    continue
                if zero_primitive(s, amask, cur):
                    cands.append(sorted(s.names[p] for p in combo))
            if cands:
                found = min(cands)
                break
        assert found is not None, "chain stuck"
        amask = s.mask_of(found)
        fb = find_base(s, amask, cur)
        bmask = fb[0] if isinstance(fb, tuple) else fb
        steps.append({"ext": found, "base": s.set_of(bmask)})
        cur |= amask
    return steps


def tree_decompose(s, dimq, alpha, default):
    """Strata, petals, clusters, and the per-cluster petal/copy accounting."""
    # A^0: union of acl-traces of the base points over the empty trace
    d0 = dimq.acl_trace(0)
    a0 = d0
    for p in s.base:
        a0 |= dimq.acl_trace(1 << p)
    chain = chain_decompose_from(s, a0)
    strata = [a0]
    petals = []  # (amask, bmask, stratum)
    for amask, bmask in chain:
        m = next(i for i, sm in enumerate(strata) if bmask & sm == bmask)
        stratum = m + 1
        while len(strata) <= stratum:
            strata.append(strata[-1])
        strata[stratum] |= amask
        # petals at stratum k must carry every lower stratum's points too
        for j in range(stratum + 1, len(strata)):
            strata[j] |= amask
        petals.append((amask, bmask, stratum))
    # clusters: petals at the same stratum sharing a base AND pairwise
    # isomorphic over it (pointwise)
    def same_type(a1m, a2m, bmask):
        if bin(a1m).count("1") != bin(a2m).count("1"):
            return False
        sub1, remap1 = induced(s, a1m | bmask)
        sub2, remap2 = induced(s, a2m | bmask)
        fixed = {remap1[p]: remap2[p]
                 for p in range(s.n) if (bmask >> p) & 1}
        return bool(embeddings(sub1, sub2, fixed=fixed))

    clusters = defaultdict(list)
    for amask, bmask, st in petals:
        for key in clusters:
            kst, kb, rep = key
            if kst == st and kb == bmask and same_type(rep, amask, bmask):
                clusters[key].append(amask)
                break
        else:
            clusters[(st, bmask, amask)].append(amask)
    cl = []
    for (st, bmask, _rep), ams in sorted(clusters.items()):
        lower = strata[st - 1]
        ell = len(ams)
        copies = copies_of(s, ams[0], bmask)
        inside = [c for c in copies if c & lower == c]
        nu = len(max_disjoint(inside))
        mu = mu_value(s, alpha, default, ams[0], bmask)
        cl.append({
            "stratum": st,
            "base": s.set_of(bmask),
            "petals": [s.set_of(a) for a in ams],
            "ell": ell, "nu": nu, "mu": mu,
        })
    return {
        "strata": [s.set_of(m) for m in strata],
        "height": len(strata) - 1,
        "clusters": cl,
    }


def chain_decompose_from(s, start):
    cur = start
    full = (1 << s.n) - 1
    out = []
    while cur != full:
        rest = [p for p in range(s.n) if not (cur >> p) & 1]
        found = None
        for k in range(1, len(rest) + 1):
            cands = []
            for combo in itertools.combinations(rest, k):
                amask = sum(1 << p for p in combo)
                if rel_delta(s, amask, cur) != 0:
                    continue
                if zero_primitive(s, amask, cur):
                    cands.append(sorted(s.names[p] for p in combo))
            if cands:
                found = min(cands)
                break
        assert found is not None
        amask = s.mask_of(found)
        fb = find_base(s, amask, cur)
        bmask = fb[0] if isinstance(fb, tuple) else fb
        out.append((amask, bmask))
        cur |= amask
    return out


# ----------------------------------------------------------------------------
# flowers


def flowers_and_bouquet(s, amask, bmask, group_base):
    """Flowers over each arrangement of the base realized by the setwise
    stabilizer of group_base (and of B), with certificates per flower."""
    bpts = sorted(p for p in range(s.n) if (bmask >> p) & 1)
    gb = [p for p in group_base]
    sw = automorphisms(s, setwise_sets=[gb]) if gb else automorphisms(s)
    sw = [g for g in sw if {g[p] for p in bpts} == set(bpts)
          or all((bmask >> g[p]) & 1 for p in bpts)]
    arrangements = sorted({tuple(g[p] for p in bpts) for g in sw})
    flowers = []
    for arr in arrangements:
        sub, remap = induced(s, amask | bmask)
        fixed = {remap[p]: q for p, q in zip(bpts, arr)}
        embs = embeddings(sub, s, fixed=fixed)
        apts = [remap[p] for p in range(s.n) if (amask >> p) & 1]
        petals = sorted({sum(1 << e[p] for p in apts) for e in embs})
        certs = maximal_disjoint_families(petals)
        flowers.append({
            "arrangement": [s.names[q] for q in arr],
            "petals": [s.set_of(p) for p in petals],
            "petal_masks": petals,
            "certificates": [[s.set_of(x) for x in c] for c in certs],
        })
    # distinct flowers by petal set
    seen, distinct = set(), []
    for f in flowers:
        key = tuple(f["petal_masks"])
        if key not in seen:
            seen.add(key)
            distinct.append(f)
    return distinct


# ----------------------------------------------------------------------------
# definability


def dclstar_report(s, dimq, group, certified):
    """Verdict ingredients for every point: fixed under the stabilizer of the
    base (pointwise or setwise), movement under each proper-subset stabilizer,
    and the dimension certificate for each proper subset."""
    base = list(s.base)
    if group == "pointwise":
        G = automorphisms(s, pointwise=base)
    else:
        G = automorphisms(s, setwise_sets=[base] if base else [])
    fixed = set(fixed_points(s, G))
    verdicts = {}
    proper = []
    for r in range(len(base)):
        for c in itertools.combinations(base, r):
            proper.append(c)
    hj_cache, dim_cache = {}, {}

    def stab(J):
        if J not in hj_cache:
            if group == "pointwise":
                hj_cache[J] = automorphisms(s, pointwise=list(J))
            else:
                hj_cache[J] = automorphisms(
                    s, setwise_sets=[list(J)] if J else [])
        return hj_cache[J]

    def dim_of(m):
        if m not in dim_cache:
            dim_cache[m] = dimq.dim(m)
        return dim_cache[m]

    for e in range(s.n):
        name = s.names[e]
        if e not in fixed:
            verdicts[name] = "no"
            continue
        if group == "pointwise" and e in base and len(base) >= 2:
            verdicts[name] = "no"
            continue
        if not certified:
            verdicts[name] = "undetermined"
            continue
        all_excluded = True
        for J in proper:
            moved = any(g[e] != e for g in stab(J))
            if moved:
                continue
            jmask = sum(1 << p for p in J)
            if dim_of(jmask | (1 << e)) > dim_of(jmask):
                continue
            all_excluded = False
            break
        verdicts[name] = "yes" if all_excluded else "undetermined"
    return verdicts, len(G), sorted(s.names[p] for p in fixed)


# ----------------------------------------------------------------------------
# fixture jobs


def load(name):
    s = parse_struct(os.path.join(FIXDIR, name + ".struct"))
    alpha, default = parse_mu(os.path.join(FIXDIR, name + ".mu"))
    return s, alpha, default


def common(s, dimq, alpha, default, max_ext=4, heavy=True):
    out = {
        "n": s.n,
        "triples": len(s.tmasks),
        "delta_full": delta(s, (1 << s.n) - 1),
        "delta_base": delta(s, s.base_mask),
    }
    full_auts = automorphisms(s)
    pw = automorphisms(s, pointwise=s.base)
    sw = automorphisms(s, setwise_sets=[s.base] if s.base else [])
    out["aut_order"] = len(full_auts)
    out["aut_pointwise_order"] = len(pw)
    out["aut_setwise_order"] = len(sw)
    out["orbits_pointwise"] = [[s.names[p] for p in orb]
                               for orb in orbits_of(s, pw)]
    out["fixed_pointwise"] = sorted(s.names[p] for p in fixed_points(s, pw))
    out["fixed_setwise"] = sorted(s.names[p] for p in fixed_points(s, sw))
    if heavy:
        out["dim_base"] = dimq.dim(s.base_mask)
        out["dim_empty"] = dimq.dim(0)
        out["base_strong"] = is_strong(s, dimq, s.base_mask)
        out["acl_trace_base"] = s.set_of(dimq.acl_trace(s.base_mask))
        out["acl_trace_empty"] = s.set_of(dimq.acl_trace(0))
        gps = good_pairs(s, max_ext)
        out["good_pairs"] = [
            {"A": s.set_of(a), "B": s.set_of(b),
             "chi": chi(s, a, b),
             "mu": mu_value(s, alpha, default, a, b)}
            for a, b in gps]
        out["lmu_violations"] = [
            g for g in out["good_pairs"] if g["chi"] > g["mu"]]
    return out


def job_examp1():
    s, alpha, default = load("examp1")
    dimq = Dim(s)
    r = common(s, dimq, alpha, default)
    r["icl_c1"] = s.set_of(dimq.icl(s.mask_of(["c1"])))
    r["icl_a1a2b1c1"] = s.set_of(dimq.icl(s.mask_of(["a1", "a2", "b1", "c1"])))
    r["dim_c1"] = dimq.dim(s.mask_of(["c1"]))
    r["chain"] = chain_decompose(s, dimq)
    r["tree"] = tree_decompose(s, dimq, alpha, default)
    r["chi_c_over_b"] = chi(s, s.mask_of(["c1", "c2"]), s.mask_of(["b1", "b2"]))
    # the stratum-2 petal is invariant under the setwise stabilizer
    sw = automorphisms(s, setwise_sets=[s.base])
    cmask = s.mask_of(["c1", "c2"])
    r["c_pair_setwise_invariant"] = all(
        sum(1 << g[p] for p in [s.index["c1"], s.index["c2"]]) == cmask
        for g in sw)
    v, _, _ = dclstar_report(s, dimq, "pointwise", certified=True)
    r["dclstar_pointwise"] = v
    return s, r


def job_examp2():
    s, alpha, default = load("examp2")
    dimq = Dim(s)
    r = common(s, dimq, alpha, default)
    # petal data
    petal = ["alpha1", "alpha2", "gamma1", "gamma3", "delta1", "delta3"]
    pmask = s.mask_of(petal)
    deg = {p: sum(1 for t in s.triples if s.index[p] in t) for p in petal}
    r["petal_degrees"] = deg
    r["unique_four_triple_point"] = [p for p in petal if deg[p] == 4]
    pw = automorphisms(s, pointwise=s.base)
    r["petal_pointwise_invariant"] = all(
        sum(1 << g[p] for p in range(s.n) if (pmask >> p) & 1) == pmask
        for g in pw)
    # embeddings of (first petal + base) into s fixing the base pointwise
    blk = s.mask_of(["c1", "c2", "c3"]) | s.base_mask
    sub, remap = induced(s, blk)
    fixed = {remap[s.index[p]]: s.index[p] for p in ["a1", "a2"]}
    embs = embeddings(sub, s, fixed=fixed)
    apts = [remap[s.index[p]] for p in ["c1", "c2", "c3"]]
    images = {sum(1 << e[p] for p in apts) for e in embs}
    r["petal_embeddings_maps"] = len(embs)
    r["petal_embeddings_images"] = sorted(s.set_of(m) for m in images)
    # movement of alpha2 when fixing only proper subsets of the base
    a2 = s.index["alpha2"]
    for J in [(), ("a1",), ("a2",)]:
        HJ = automorphisms(s, pointwise=[s.index[p] for p in J])
        r["alpha2_moved_fixing_" + ("empty" if not J else J[0])] = any(
            g[a2] != a2 for g in HJ)
    r["dim_a1"] = dimq.dim(s.mask_of(["a1"]))
    r["dim_a1_alpha2"] = dimq.dim(s.mask_of(["a1", "alpha2"]))
    r["chi_cblock"] = chi(s, s.mask_of(["c1", "c2", "c3"]), s.base_mask)
    r["chi_petal"] = chi(s, pmask, s.mask_of(["c2", "d2"]))
    r["chain"] = chain_decompose(s, dimq)
    r["tree"] = tree_decompose(s, dimq, alpha, default)
    v, _, _ = dclstar_report(s, dimq, "pointwise", certified=True)
    r["dclstar_pointwise"] = v
    vs, _, _ = dclstar_report(s, dimq, "setwise", certified=False)
    r["sdclstar_uncertified"] = vs
    return s, r


def job_examp2_sym():
    s, alpha, default = load("examp2-sym")
    dimq = Dim(s)
    r = {
        "n": s.n, "triples": len(s.tmasks),
        "delta_full": delta(s, (1 << s.n) - 1),
    }
    pw = automorphisms(s, pointwise=s.base)
    sw = automorphisms(s, setwise_sets=[s.base])
    r["aut_pointwise_order"] = len(pw)
    r["aut_setwise_order"] = len(sw)
    r["fixed_pointwise"] = sorted(s.names[p] for p in fixed_points(s, pw))
    r["fixed_setwise"] = sorted(s.names[p] for p in fixed_points(s, sw))
    a2 = s.index["alpha2"]
    r["alpha2_moved_setwise"] = any(g[a2] != a2 for g in sw)
    r["base_swap_realized"] = any(
        g[s.index["a1"]] == s.index["a2"] for g in sw)
    r["dim_a1"] = dimq.dim(s.mask_of(["a1"]))
    r["dim_a1_alpha2"] = dimq.dim(s.mask_of(["a1", "alpha2"]))
    r["dim_base"] = dimq.dim(s.base_mask)
    r["base_strong"] = is_strong(s, dimq, s.base_mask)
    v, _, _ = dclstar_report(s, dimq, "pointwise", certified=True)
    r["dclstar_pointwise"] = {k: v[k] for k in
                              ["alpha1", "alpha2", "alpha1p", "alpha2p"]}
    vs, _, _ = dclstar_report(s, dimq, "setwise", certified=True)
    r["sdclstar_alpha2"] = vs["alpha2"]
    return s, r


def job_steiner():
    s, alpha, default = load("steiner-ce")
    dimq = Dim(s)
    r = common(s, dimq, alpha, default)
    r["lines"] = sorted(s.set_of(l) for l in s.full_lines)
    r["line_count"] = len(s.full_lines)
    r["line_lengths"] = sorted(bin(l).count("1") for l in s.full_lines)
    a1 = s.index["alpha1"]
    for J in [(), ("a1",), ("a2",)]:
        HJ = automorphisms(s, pointwise=[s.index[p] for p in J])
        r["alpha1_moved_fixing_" + ("empty" if not J else J[0])] = any(
            g[a1] != a1 for g in HJ)
    r["dim_a1"] = dimq.dim(s.mask_of(["a1"]))
    r["dim_a1_alpha1"] = dimq.dim(s.mask_of(["a1", "alpha1"]))
    r["dim_a2_alpha1"] = dimq.dim(s.mask_of(["a2", "alpha1"]))
    dblk = s.mask_of(["d1", "d2", "d3", "d4", "d5"])
    r["chi_dblock"] = chi(s, dblk, s.base_mask)
    greek = s.mask_of(["alpha1", "alpha2", "delta1", "delta2", "delta4",
                       "delta5", "gamma1", "gamma2", "gamma4", "gamma5"])
    r["chi_greek"] = chi(s, greek, s.mask_of(["d3", "c3"]))
    r["greek_base"] = s.set_of(
        find_base(s, greek, ((1 << s.n) - 1) & ~greek))
    r["chain"] = chain_decompose(s, dimq)
    r["tree"] = tree_decompose(s, dimq, alpha, default)
    v, _, _ = dclstar_report(s, dimq, "pointwise", certified=True)
    r["dclstar_pointwise"] = {k: v[k] for k in
                              ["alpha1", "alpha2", "a1", "a2", "d1", "d3"]}
    vs, _, _ = dclstar_report(s, dimq, "setwise", certified=False)
    r["sdclstar_uncertified_alpha1"] = vs["alpha1"]
    # alpha copies on a full length-4 line over a base pair on it
    r["chi_alpha_on_4line"] = chi(
        s, s.mask_of(["d3"]), s.mask_of(["a2", "d5"]))
    return s, r


def job_overlap():
    s, alpha, default = load("overlap-flowers")
    dimq = Dim(s)
    r = common(s, dimq, alpha, default)
    A = s.mask_of(["x", "y", "z"])
    B = s.base_mask
    r["chi_main"] = chi(s, A, B)
    r["mu_main"] = mu_value(s, alpha, default, A, B)
    fl = flowers_and_bouquet(s, A, B, s.base)
    r["bouquet_size"] = len(fl)
    r["petal_count"] = len(fl[0]["petals"])
    r["certificates"] = len(fl[0]["certificates"])
    r["certificate_sizes"] = sorted(len(c) for c in fl[0]["certificates"])
    r["flower_bound"] = r["mu_main"] + delta(s, B)
    v, _, _ = dclstar_report(s, dimq, "pointwise", certified=True)
    r["dclstar_nonbase_yes"] = sorted(
        k for k, vv in v.items() if vv == "yes" and k not in
        ["b1", "b2", "b3"])
    r["dclstar_xyz"] = {k: v[k] for k in ["x", "y", "z"]}
    return s, r


def job_overlap2():
    s, alpha, default = load("overlap-flowers-2")
    dimq = Dim(s)
    r = common(s, dimq, alpha, default)
    C1 = s.mask_of(["c11", "c12", "c13"])
    B = s.base_mask
    r["chi_c1"] = chi(s, C1, B)
    fl = flowers_and_bouquet(s, C1, B, s.base)
    r["bouquet_size"] = len(fl)
    r["flowers"] = [{
        "arrangement": f["arrangement"],
        "petals": f["petals"],
        "cert_count": len(f["certificates"]),
        "cert_sizes": sorted(len(c) for c in f["certificates"]),
    } for f in fl]
    swap = any(g[s.index["b1"]] == s.index["b2"]
               for g in automorphisms(s, setwise_sets=[s.base]))
    r["base_swap_realized"] = swap
    r["chain"] = chain_decompose(s, dimq)
    r["tree"] = tree_decompose(s, dimq, alpha, default)
    return s, r


def job_k4():
    s, alpha, default = load("k4-design")
    dimq = Dim(s)
    r = common(s, dimq, alpha, default)
    r["icl_w"] = s.set_of(dimq.icl(s.mask_of(["w"])))
    r["dim_w"] = dimq.dim(s.mask_of(["w"]))
    v, _, _ = dclstar_report(s, dimq, "pointwise", certified=True)
    r["dclstar"] = v
    return s, r


def job_alpha_line(k):
    s, alpha, default = load(f"alpha-line-{k}")
    dimq = Dim(s)
    r = common(s, dimq, alpha, default)
    free = [s.index[f"x{i}"] for i in range(1, k - 1)]
    pw = automorphisms(s, pointwise=s.base)
    r["stabilizer_order"] = len(pw)
    perms_on_free = {tuple(g[p] for p in free) for g in pw}
    import math
    r["acts_as_full_symmetric"] = len(perms_on_free) == math.factorial(
        len(free))
    r["fixed_free_points"] = sorted(
        s.names[p] for p in free if all(g[p] == p for g in pw))
    r["line_length"] = k
    return s, r


def main():
    os.makedirs(OUTDIR, exist_ok=True)
    jobs = {
        "examp1": job_examp1,
        "examp2": job_examp2,
        "examp2-sym": job_examp2_sym,
        "steiner-ce": job_steiner,
        "overlap-flowers": job_overlap,
        "overlap-flowers-2": job_overlap2,
        "k4-design": job_k4,
        "alpha-line-3": lambda: job_alpha_line(3),
        "alpha-line-4": lambda: job_alpha_line(4),
        "alpha-line-5": lambda: job_alpha_line(5),
    }
    results = {}
    for name, fn in jobs.items():
        print(f"=== {name} ===", flush=True)
        s, r = fn()
        results[name] = r
        for k, v in r.items():
            if k in ("good_pairs", "tree", "chain", "flowers"):
                print(f"  {k}: {json.dumps(v)[:400]}")
            else:
                print(f"  {k}: {v}")
    with open(os.path.join(OUTDIR, "expected.json"), "w") as f:
        json.dump(results, f, indent=1, sort_keys=True, default=str)
    print("\nwrote", os.path.join(OUTDIR, "expected.json"))


if __name__ == "__main__":
    main()
