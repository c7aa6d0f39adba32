"""Polynomial-time equilibrium computation on cactus graphs.

Structure: the union of all simple s-t paths is a chain of bridges and
cycles (the connection strip); everything else hangs off strip vertices
as dead-end branches.  Branches are first contracted bottom-up into swap
options, i.e. closed odd walks that exchange mover and follower at their
root for a known cost split.  The strip is then swept from t back to s,
solving each cycle with dynamic programming over both traversal
directions and handing a pair of exit-cost values to its predecessor.

All DP values are carried as entries (decider cost, follower cost, first
move, realization) and compared exactly like the generic engine compares
moves, so results match backward induction bit for bit.  Feasibility
bookkeeping is uniform: maneuvers that must hand the move to the other
player terminate in boundary entries that are infeasible in the
non-flipped configuration, which reproduces every parity condition of
the per-case recurrences without special cases.

Exit-cost orientation: for a strip vertex v, `edv` is the onward value
when v may never be re-entered and `ed2v` the value when one later
return to v is allowed; the component on the s-side of v consumes `ed2v`
after a plain hand-over at v and `edv` after any maneuver that already
visits v twice.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NoPathToSink, NotCactus, NotDirectedCactus
from .graph import Block, BlockCutTree, GameGraph, block_cut_tree
from .values import TOP, value_key


# ---------------------------------------------------------------------------
# entry algebra

class Ent(NamedTuple):
    """A DP value: cost split, first move target, lazy realization walk.

    d / f are the costs for the player deciding / not deciding at the
    entry's vertex.  rz lists the vertices the play moves through after
    leaving that vertex (lazily, as a concat tree); head is rz's first
    vertex, kept eagerly for tie-breaking.
    """

    d: object
    f: object
    head: int
    rz: tuple


TOP_ENT = Ent(TOP, TOP, -1, ())
TOP_PAIR = (TOP_ENT, TOP_ENT)

# A swap option is carried as an entry rooted at its vertex: d / f are the
# initiator's and opponent's shares, rz the closed odd walk (excluding the
# standing vertex, ending back at it).
SwapOption = Ent


class ExitCosts(NamedTuple):
    """Onward values at a strip vertex.

    once: play that never re-enters the vertex; free: play that may come
    back to it one more time (always once <= free for the decider is false
    in general, but free.d <= once.d: more options can only help).
    """

    once: Ent
    free: Ent


def _key(e: Ent):
    return (value_key(e.d), value_key(e.f), e.head)


def pick(entries) -> Ent:
    """Best entry by (own cost, other cost, first move id); TOP if none."""
    best = TOP_ENT
    bk = _key(TOP_ENT)
    for e in entries:
        if e is None:
            continue
        k = _key(e)
        if k < bk:
            best, bk = e, k
    return best


def cat(a, b):
    if not a:
        return b
    if not b:
        return a
    return ("cat", a, b)


def flatten(rz) -> list[int]:
    out = []
    stack = [rz]
    while stack:
        x = stack.pop()
        if x and x[0] == "cat":
            stack.append(x[2])
            stack.append(x[1])
        else:
            out.extend(x)
    return out


def step(target: int, cost, child: Ent) -> Ent:
    """Mover pays cost, moves to target, roles flip into `child`."""
    if cost is None or child.d is TOP:
        return TOP_ENT
    return Ent(cost + child.f, child.d, target, cat((target,), child.rz))


def step_pair(target: int, cost, nxt) -> tuple[Ent, Ent]:
    """Configuration-tracked step: a move flips which player decides."""
    return (step(target, cost, nxt[1]), step(target, cost, nxt[0]))


def use_swap(sw: Ent, options) -> Ent:
    """Decider buys the swap, then the other player picks a continuation."""
    chosen = pick(options)
    if chosen.d is TOP or sw.d is TOP:
        return TOP_ENT
    return Ent(sw.d + chosen.f, sw.f + chosen.d, sw.head, cat(sw.rz, chosen.rz))


def _end_pair() -> tuple[Ent, Ent]:
    """Boundary accepting the walk only if the decider flipped en route."""
    return (TOP_ENT, Ent(0, 0, -1, ()))


def _cost_lookup(g: GameGraph):
    m = {}
    for e in g.edges:
        m[(e.u, e.v)] = e.cost
        if not g.directed:
            m[(e.v, e.u)] = e.cost

    def costf(u: int, v: int):
        return m.get((u, v))

    return costf


# ---------------------------------------------------------------------------
# decomposition

@dataclass(frozen=True)
class StripComponent:
    kind: str  # "bridge" or "cycle"
    near: int  # articulation on the s side
    far: int   # articulation on the t side
    ring: tuple[int, ...] | None = None  # cyclic order, near first


@dataclass(frozen=True)
class ConnectionStrip:
    components: tuple[StripComponent, ...]
    joints: tuple[int, ...]  # s, shared articulations, t


def _block_path(bct: BlockCutTree, s: int, t: int) -> list[int]:
    start = set(bct.blocks_of_vertex[s])
    target = set(bct.blocks_of_vertex[t])
    both = start & target
    if both:
        return [min(both)]
    parent: dict[int, int] = {}
    seen = set(start)
    dq = deque(sorted(start))
    found = None
    while dq:
        b = dq.popleft()
        if b in target:
            found = b
            break
        for v in bct.blocks[b].vertices:
            for nb in bct.blocks_of_vertex[v]:
                if nb not in seen:
                    seen.add(nb)
                    parent[nb] = b
                    dq.append(nb)
    if found is None:
        raise NoPathToSink("s and t are not connected")
    path = [found]
    while path[-1] not in start:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _shared_vertex(a: Block, b: Block) -> int:
    common = set(a.vertices) & set(b.vertices)
    if len(common) != 1:
        raise NotCactus("adjacent blocks must share exactly one vertex")
    return next(iter(common))


def _rotate_ring(ring: tuple[int, ...], first: int) -> list[int]:
    i = ring.index(first)
    return list(ring[i:] + ring[:i])


def decompose(g: GameGraph, bct: BlockCutTree | None = None):
    """Connection strip plus branch blocks grouped by attachment vertex."""
    ug = g if not g.directed else GameGraph(
        directed=False, n=g.n, edges=g.edges, s=g.s, t=g.t, labels=g.labels)
    if bct is None:
        bct = block_cut_tree(ug)
    for b in bct.blocks:
        if not (b.is_bridge or b.is_cycle):
            raise NotCactus("a biconnected component is neither bridge nor cycle")
    path = _block_path(bct, g.s, g.t)
    path_set = set(path)

    comps = []
    joints = [g.s]
    near = g.s
    for idx, b_id in enumerate(path):
        block = bct.blocks[b_id]
        if idx + 1 < len(path):
            far = _shared_vertex(block, bct.blocks[path[idx + 1]])
        else:
            far = g.t
        if block.is_bridge:
            comps.append(StripComponent("bridge", near, far))
        else:
            comps.append(StripComponent(
                "cycle", near, far, ring=tuple(_rotate_ring(block.ring, near))))
        joints.append(far)
        near = far

    strip_vertices = set()
    for b_id in path:
        strip_vertices.update(bct.blocks[b_id].vertices)
    branch_map: dict[int, list[Block]] = {}
    for v in sorted(strip_vertices):
        direct = [bct.blocks[b] for b in bct.blocks_of_vertex[v] if b not in path_set]
        if direct:
            branch_map[v] = direct
    return ConnectionStrip(tuple(comps), tuple(joints)), branch_map, bct, path_set


# ---------------------------------------------------------------------------
# branch contraction

def contract_pendant_cycle(ring, costf, swaps, counter=None) -> Ent | None:
    """Swap option realized by a dead-end cycle rooted at ring[0].

    swaps maps interior cycle vertices to their already-contracted
    options.  Both traversal directions are evaluated; missing arcs (in
    directed graphs) make the affected direction infeasible on their own.
    """
    reversed_ring = [ring[0]] + list(ring[:0:-1])
    best = pick(
        _contract_direction(list(orient), costf, swaps, counter)
        for orient in (ring, reversed_ring)
    )
    return None if best.d is TOP else best


def _contract_direction(ring, costf, swaps, counter=None) -> Ent:
    k = len(ring) - 1
    end = _end_pair()

    # forced turn-around returns: position i back to the root
    fr = {}
    cur = end
    for pos in range(1, k + 1):
        cur = step_pair(ring[pos - 1], costf(ring[pos], ring[pos - 1]), cur)
        fr[pos] = cur

    tc_next = rc_next = end
    nxt = ring[0]
    for i in range(k, 0, -1):
        v = ring[i]
        fwd = costf(v, nxt)
        c1_tc = step_pair(nxt, fwd, tc_next)
        c1_rc = step_pair(nxt, fwd, rc_next)
        sw = swaps.get(v)
        if sw is None:
            tc_next, rc_next = c1_tc, c1_rc
        else:
            tc_i, rc_i = [], []
            for c in (0, 1):
                onward = c1_rc[1 - c]
                rc_i.append(pick([c1_rc[c], use_swap(sw, [onward])]))
                tc_i.append(pick([c1_tc[c], use_swap(sw, [onward, fr[i][1 - c]])]))
            tc_next, rc_next = tuple(tc_i), tuple(rc_i)
        nxt = v
        if counter is not None:
            counter[0] += 1
    return step(ring[1], costf(ring[0], ring[1]), tc_next[1])


def _merge_options(acc: dict, v: int, option: Ent) -> None:
    prev = acc.get(v)
    acc[v] = option if prev is None else pick([prev, option])


def contract_branches(g: GameGraph, bct: BlockCutTree, path_set, counter=None):
    """Swap option per vertex, contracted leaves-first over the block forest.

    Bridges propagate a deeper swap at doubled bridge cost for the
    initiator (who crosses twice) and are silent otherwise: a bare
    out-and-back is a closed walk of even length.  In directed graphs a
    bridge can never be re-crossed, so bridge subtrees contribute nothing.
    """
    costf = _cost_lookup(g)
    order = []       # non-strip blocks in BFS-from-strip order
    root_of = {}     # block id -> attachment vertex
    seen_blocks = set(path_set)
    frontier = deque()
    strip_vertices = set()
    for b_id in path_set:
        strip_vertices.update(bct.blocks[b_id].vertices)
    for v in sorted(strip_vertices):
        frontier.append(v)
    seen_vertices = set(strip_vertices)
    while frontier:
        v = frontier.popleft()
        for b_id in bct.blocks_of_vertex[v]:
            if b_id in seen_blocks:
                continue
            seen_blocks.add(b_id)
            root_of[b_id] = v
            order.append(b_id)
            for w in bct.blocks[b_id].vertices:
                if w not in seen_vertices:
                    seen_vertices.add(w)
                    frontier.append(w)

    acc: dict[int, Ent] = {}
    for b_id in reversed(order):
        block = bct.blocks[b_id]
        rv = root_of[b_id]
        if block.is_bridge:
            if g.directed:
                continue
            e = g.edges[block.edge_indices[0]]
            w = e.v if e.u == rv else e.u
            child = acc.get(w)
            if child is None:
                continue
            option = Ent(
                2 * e.cost + child.f,
                child.d,
                w,
                cat((w,), cat(child.rz, (rv,))),
            )
            _merge_options(acc, rv, option)
        else:
            ring = tuple(_rotate_ring(block.ring, rv))
            option = contract_pendant_cycle(ring, costf, acc, counter)
            if option is not None:
                _merge_options(acc, rv, option)
    return acc


# ---------------------------------------------------------------------------
# strip sweep

def _exit_menu(exit_once, exit_free, sw_exit, extra, exit_is_t):
    """Options of whoever decides at a cycle exit (or bridge end).

    exit_free is consumed by a plain hand-over (the continuation may come
    back once); any maneuver listed in extra, and the vertex swap, visit
    the exit twice, so their continuation is the no-return value.
    The game ends on arrival at t, so there the menu collapses.
    """
    if exit_is_t:
        return exit_free
    items = [exit_free]
    if sw_exit is not None:
        items.append(use_swap(sw_exit, [exit_once]))
    items.extend(e for e in extra if e is not None)
    return pick(items)


def _direction_pass(ring, l, costf, swaps, exit_once, exit_free, exit_is_t,
                    allow_turns, counter=None):
    """One traversal direction of a strip cycle.

    Returns (unrestricted, restricted) candidate entries at ring[0]: the
    unrestricted value may re-enter ring[0] (turn-around or full loop),
    the restricted one never does.
    """
    k = len(ring) - 1
    exit_ret = (TOP_ENT, exit_once)  # maneuvers must return with roles flipped
    sw_exit = swaps.get(ring[l]) if not exit_is_t else None

    # forced re-descent after a full loop: from the re-entered ring[0] to the exit
    cur = exit_ret
    for pos in range(l - 1, -1, -1):
        cur = step_pair(ring[pos + 1], costf(ring[pos], ring[pos + 1]), cur)
    close_tail = cur

    # forced returns from the far side back to the exit (turn maneuvers)
    fret = {}
    if allow_turns and l < k:
        cur = exit_ret
        prev = ring[l]
        for i in range(l + 1, k + 1):
            cur = step_pair(prev, costf(ring[i], prev), cur)
            fret[i] = cur
            prev = ring[i]

    def out_leg(close_pair):
        """Menu entry for moving past the exit; close_pair gates the full loop."""
        ot_next = oc_next = close_pair
        nxt = ring[0]
        for i in range(k, l, -1):
            v = ring[i]
            fwd = costf(v, nxt)
            c1_ot = step_pair(nxt, fwd, ot_next)
            c1_oc = step_pair(nxt, fwd, oc_next)
            sw = swaps.get(v)
            if sw is None:
                ot_next, oc_next = c1_ot, c1_oc
            else:
                ot_i, oc_i = [], []
                for c in (0, 1):
                    onward = c1_oc[1 - c]
                    oc_i.append(pick([c1_oc[c], use_swap(sw, [onward])]))
                    turn = fret[i][1 - c] if (allow_turns and i in fret) else None
                    ot_i.append(pick([c1_ot[c], use_swap(sw, [onward, turn])]))
                ot_next, oc_next = tuple(ot_i), tuple(oc_i)
            nxt = v
            if counter is not None:
                counter[0] += 1
        first = ring[l + 1] if l < k else ring[0]
        item = step(first, costf(ring[l], first), ot_next[1])
        return None if item.d is TOP else item

    out_full = out_leg(close_tail)          # turns and full loop
    if allow_turns:
        out_turn_only = out_leg(TOP_PAIR)   # turns only (descent used a swap)
    else:
        out_turn_only = None

    # forced climbs back up to the exit, for backward-swap maneuvers
    fup = {}
    if allow_turns:
        cur = exit_ret
        for i in range(l - 1, 0, -1):
            cur = step_pair(ring[i + 1], costf(ring[i], ring[i + 1]), cur)
            fup[i] = cur

    def backward_swap_item(j):
        """Best dip below the exit turning at a swap strictly above j."""
        bl = TOP_PAIR
        for i in range(j + 1, l):
            v = ring[i]
            c1 = step_pair(ring[i - 1], costf(v, ring[i - 1]), bl)
            sw = swaps.get(v)
            if sw is None:
                bl = c1
            else:
                bl = tuple(
                    pick([c1[c], use_swap(sw, [fup[i][1 - c]])]) for c in (0, 1)
                )
            if counter is not None:
                counter[0] += 1
        item = step(ring[l - 1], costf(ring[l], ring[l - 1]), bl[1])
        return None if item.d is TOP else item

    def around_pair(j):
        """Value at the re-entered ring[0] heading the long way to the exit."""
        menu = _exit_menu(exit_once, exit_free, sw_exit,
                          [backward_swap_item(j)], exit_is_t)
        pr = (menu, menu)
        for i in range(l + 1, k + 1):
            v = ring[i]
            stepped = step_pair(ring[i - 1], costf(v, ring[i - 1]), pr)
            sw = swaps.get(v)
            if sw is None:
                pr = stepped
            else:
                pr = tuple(
                    pick([stepped[c], use_swap(sw, [stepped[1 - c]])])
                    for c in (0, 1)
                )
            if counter is not None:
                counter[0] += 1
        return step_pair(ring[k], costf(ring[0], ring[k]), pr)

    menu_rd = _exit_menu(exit_once, exit_free, sw_exit, [out_turn_only], exit_is_t)
    menu_td = _exit_menu(exit_once, exit_free, sw_exit, [out_full], exit_is_t)
    rd_pair = (menu_rd, menu_rd)
    td_pair = (menu_td, menu_td)
    for i in range(l - 1, 0, -1):
        v = ring[i]
        fwd = costf(v, ring[i + 1])
        s_rd = step_pair(ring[i + 1], fwd, rd_pair)
        s_td = step_pair(ring[i + 1], fwd, td_pair)
        sw = swaps.get(v)
        if sw is None:
            rd_pair, td_pair = s_rd, s_td
        else:
            ret_i = None
            if allow_turns:
                cur = around_pair(i)
                for pos in range(1, i + 1):
                    cur = step_pair(ring[pos - 1], costf(ring[pos], ring[pos - 1]), cur)
                ret_i = cur
            new_rd, new_td = [], []
            for c in (0, 1):
                onward = s_rd[1 - c]
                new_rd.append(pick([s_rd[c], use_swap(sw, [onward])]))
                turn = ret_i[1 - c] if ret_i is not None else None
                new_td.append(pick([s_td[c], use_swap(sw, [onward, turn])]))
            rd_pair, td_pair = tuple(new_rd), tuple(new_td)
        if counter is not None:
            counter[0] += 1

    first_cost = costf(ring[0], ring[1])
    unrestricted = step(ring[1], first_cost, td_pair[1])
    restricted = step(ring[1], first_cost, rd_pair[1])
    return unrestricted, restricted


def solve_strip_cycle(ring, entry, exit_v, costf, swaps, exit_once, exit_free,
                      exit_is_t, allow_turns, counter=None):
    """Exit-cost pair at a strip cycle's entry, over both directions."""
    base = _rotate_ring(tuple(ring), entry)
    orients = [base, [base[0]] + base[:0:-1]]
    unrestricted, restricted = [], []
    for orient in orients:
        l = orient.index(exit_v)
        u, r = _direction_pass(orient, l, costf, swaps, exit_once, exit_free,
                               exit_is_t, allow_turns, counter)
        unrestricted.append(u)
        restricted.append(r)
    return ExitCosts(once=pick(restricted), free=pick(unrestricted))


def propagate_bridge(near, far, cost, swaps, exit_once, exit_free, far_is_t):
    """Exit costs upstream of a strip bridge; a bridge is never re-crossed."""
    menu = _exit_menu(exit_once, exit_free, swaps.get(far) if not far_is_t else None,
                      [], far_is_t)
    ent = step(far, cost, menu)
    return ExitCosts(once=ent, free=ent)


def _sweep(g: GameGraph, strip: ConnectionStrip, swaps, allow_turns, counter):
    costf = _cost_lookup(g)
    exit_once = exit_free = Ent(0, 0, -1, ())
    for comp in reversed(strip.components):
        far_is_t = comp.far == g.t
        if comp.kind == "bridge":
            exit_once, exit_free = propagate_bridge(
                comp.near, comp.far, costf(comp.near, comp.far), swaps,
                exit_once, exit_free, far_is_t)
        else:
            exit_once, exit_free = solve_strip_cycle(
                comp.ring, comp.near, comp.far, costf, swaps,
                exit_once, exit_free, far_is_t, allow_turns, counter)
        if exit_free.d is TOP:
            raise NoPathToSink("strip component became infeasible")
    sw_s = swaps.get(g.s)
    if sw_s is None:
        return exit_free
    return pick([exit_free, use_swap(sw_s, [exit_once])])


def _solve(g: GameGraph, algorithm: str):
    from .engine import Solution, finalize_solution

    if g.s == g.t:
        return Solution(0, 0, (g.s,), (), 0, algorithm)
    counter = [0]
    strip, _branches, bct, path_set = decompose(g)
    swaps = contract_branches(g, bct, path_set, counter)
    final = _sweep(g, strip, swaps, allow_turns=not g.directed, counter=counter)
    if final.d is TOP:
        raise NoPathToSink(f"no feasible play from s={g.s}")
    walk = [g.s] + flatten(final.rz)
    sol = finalize_solution(g, walk, counter[0], algorithm)
    if (sol.cost_a, sol.cost_b) != (final.d, final.f):
        raise AssertionError(
            f"replayed costs {(sol.cost_a, sol.cost_b)} disagree with "
            f"DP value {(final.d, final.f)}"
        )
    return sol


def solve_cactus(g: GameGraph):
    """Equilibrium on an undirected cactus graph."""
    if g.directed:
        raise NotCactus("graph is directed; use the directed-cactus solver")
    return _solve(g, "cactus")


def solve_directed_cactus(g: GameGraph):
    """Equilibrium on an orientation of a cactus graph.

    Turn-around maneuvers need anti-parallel arcs and cannot occur, so the
    sweep degenerates to forward chains: each cycle offers its feasible
    descent(s), plus the full loop when it is cyclically oriented.
    """
    if not g.directed:
        raise NotDirectedCactus("graph is undirected")
    arcs = {(e.u, e.v) for e in g.edges}
    if any((v, u) in arcs for (u, v) in arcs):
        raise NotDirectedCactus("anti-parallel arcs are not an edge orientation")
    return _solve(g, "directed-cactus")
