"""
Compiled link-cut kernels over flat node arrays

Layout shared with DynamicForest:
    links[LEFT | RIGHT | PARENT, node]  int64, 0 is the nil node
    sums[VALUE | TOTAL, node]           float64, sums[TOTAL, 0] stays 0
    flip[node]                          pending subtree reversal
    stack                               scratch, one slot per node

The parent of a splay root is its path-parent pointer (nil for the tree root).
"""
import numpy as np
from numba import njit

NIL = 0
LEFT = 0
RIGHT = 1
PARENT = 2
VALUE = 0
TOTAL = 1


@njit(cache=True)
def is_splay_root(links, node):
    up = links[PARENT, node]
    return up == NIL or (links[LEFT, up] != node and links[RIGHT, up] != node)


@njit(cache=True)
def push(links, flip, node):
    if flip[node]:
        left = links[LEFT, node]
        right = links[RIGHT, node]
        links[LEFT, node] = right
        links[RIGHT, node] = left
        if left != NIL:
            flip[left] = not flip[left]
        if right != NIL:
            flip[right] = not flip[right]
        flip[node] = False


@njit(cache=True)
def pull(links, sums, node):
    sums[TOTAL, node] = (
        sums[VALUE, node] + sums[TOTAL, links[LEFT, node]] + sums[TOTAL, links[RIGHT, node]]
    )


@njit(cache=True)
def rotate(links, sums, node):
    up = links[PARENT, node]
    grand = links[PARENT, up]
    up_was_root = is_splay_root(links, up)

    if links[LEFT, up] == node:
        moved = links[RIGHT, node]
        links[LEFT, up] = moved
        links[RIGHT, node] = up
    else:
        moved = links[LEFT, node]
        links[RIGHT, up] = moved
        links[LEFT, node] = up

    if not up_was_root:
        if links[LEFT, grand] == up:
            links[LEFT, grand] = node
        else:
            links[RIGHT, grand] = node

    links[PARENT, node] = grand
    links[PARENT, up] = node
    if moved != NIL:
        links[PARENT, moved] = up

    pull(links, sums, up)
    pull(links, sums, node)


@njit(cache=True)
def splay(links, flip, sums, stack, node):
    # Pending reversals are pushed top-down before rotating
    depth = 0
    stack[0] = node
    current = node
    while not is_splay_root(links, current):
        current = links[PARENT, current]
        depth += 1
        stack[depth] = current
    for position in range(depth, -1, -1):
        push(links, flip, stack[position])

    while not is_splay_root(links, node):
        up = links[PARENT, node]
        if not is_splay_root(links, up):
            grand = links[PARENT, up]
            if (links[LEFT, up] == node) == (links[LEFT, grand] == up):
                rotate(links, sums, up)
            else:
                rotate(links, sums, node)
        rotate(links, sums, node)


@njit(cache=True)
def access(links, flip, sums, stack, node):
    """Make the root-to-node path preferred; node ends as its splay root"""
    last = NIL
    current = node
    while current != NIL:
        splay(links, flip, sums, stack, current)
        links[RIGHT, current] = last
        pull(links, sums, current)
        last = current
        current = links[PARENT, current]
    splay(links, flip, sums, stack, node)


@njit(cache=True)
def evert(links, flip, sums, stack, node):
    """Make node the root of its represented tree"""
    access(links, flip, sums, stack, node)
    flip[node] = not flip[node]
    push(links, flip, node)


@njit(cache=True)
def find_root(links, flip, sums, stack, node):
    access(links, flip, sums, stack, node)
    current = node
    push(links, flip, current)
    while links[LEFT, current] != NIL:
        current = links[LEFT, current]
        push(links, flip, current)
    splay(links, flip, sums, stack, current)
    return current


@njit(cache=True)
def expose_path(links, flip, sums, stack, source, target):
    """Splay tree rooted at target holds exactly the source..target path, in order"""
    evert(links, flip, sums, stack, source)
    access(links, flip, sums, stack, target)


@njit(cache=True)
def link_nodes(links, flip, sums, stack, child, parent):
    evert(links, flip, sums, stack, child)
    links[PARENT, child] = parent


@njit(cache=True)
def cut_nodes(links, flip, sums, stack, a, b):
    # a and b are adjacent in the represented tree
    expose_path(links, flip, sums, stack, a, b)
    push(links, flip, b)
    links[LEFT, b] = NIL
    links[PARENT, a] = NIL
    pull(links, sums, b)


@njit(cache=True)
def select_prefix(links, flip, sums, root, target):
    """
    Node of positive value whose prefix interval [before, after) contains target,
    in the in-order of the splay tree under root; the last such node when
    rounding carries target past the final prefix
    """
    node = root
    chosen = NIL
    last_passed = NIL
    while node != NIL:
        push(links, flip, node)
        left_total = sums[TOTAL, links[LEFT, node]]
        if target < left_total:
            node = links[LEFT, node]
            continue
        target -= left_total
        if target < sums[VALUE, node]:
            chosen = node
            break
        target -= sums[VALUE, node]
        if sums[VALUE, node] > 0.0:
            last_passed = node
        node = links[RIGHT, node]

    if chosen == NIL:
        chosen = last_passed
    return chosen


@njit(cache=True)
def swap_cycle_edge(links, flip, sums, stack, u, v, added_value, r):
    """
    Close the cycle u..v with a new edge of value added_value and remove one
    cycle edge, the one whose prefix interval over [added, path u -> v] holds
    r times the cycle total.

    Returns NIL when the new edge itself is removed. Otherwise returns the
    removed edge node, already reused in place as the new edge between u and v.
    """
    expose_path(links, flip, sums, stack, u, v)
    target = r * (added_value + sums[TOTAL, v])
    if target < added_value:
        return NIL

    chosen = select_prefix(links, flip, sums, v, target - added_value)
    splay(links, flip, sums, stack, chosen)
    # chosen now roots the whole u..v path: u side to its left, v side to its right
    u_side = links[LEFT, chosen]
    v_side = links[RIGHT, chosen]
    links[LEFT, chosen] = NIL
    links[RIGHT, chosen] = NIL
    sums[VALUE, chosen] = added_value
    sums[TOTAL, chosen] = added_value

    # u is still the root of its side; hang that side below the new edge, and
    # the new edge below v
    links[PARENT, u_side] = chosen
    links[PARENT, v_side] = NIL
    links[PARENT, chosen] = v
    return chosen


@njit(cache=True)
def run_exchanges(
    links, flip, sums, stack,
    node_edge, edge_node, known_u, known_v, known_weight,
    non_tree, position, indices, draws,
    graph_u, graph_v, graph_weight,
):
    """
    Batch of cycle exchanges: step s adds non_tree[indices[s]] and removes the
    cycle edge selected by draws[s]. Keeps the edge index arrays and the
    non_tree / position bookkeeping in step. Returns the number of moves that
    changed the tree.
    """
    moves = 0
    for step in range(indices.shape[0]):
        index = indices[step]
        added = non_tree[index]
        slot = swap_cycle_edge(
            links, flip, sums, stack,
            graph_u[added] + 1, graph_v[added] + 1, 1.0 / graph_weight[added], draws[step],
        )
        if slot == NIL:
            continue

        removed = node_edge[slot]
        node_edge[slot] = added
        edge_node[removed] = NIL
        edge_node[added] = slot
        known_u[added] = graph_u[added]
        known_v[added] = graph_v[added]
        known_weight[added] = graph_weight[added]

        non_tree[index] = removed
        position[removed] = index
        position[added] = -1
        moves += 1
    return moves


def empty_node_arrays(size: int):
    """(links, flip, sums, stack) for `size` nodes, all detached"""
    return (
        np.zeros((3, size), dtype=np.int64),
        np.zeros(size, dtype=np.bool_),
        np.zeros((2, size), dtype=np.float64),
        np.zeros(size, dtype=np.int64),
    )
