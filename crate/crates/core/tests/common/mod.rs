//! Brute-force oracles, written against plain adjacency lists so they share
//! no code with the solvers they check.
#![allow(dead_code)]

use liminal_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn spread(adj: &[Vec<usize>], burned: &[bool]) -> Vec<bool> {
    let mut next = burned.to_vec();
    for (v, &b) in burned.iter().enumerate() {
        if b {
            for &w in &adj[v] {
                next[w] = true;
            }
        }
    }
    next
}

/// Rounds taken when every round places the first unburned vertex of `order`.
fn rounds_with_priority(adj: &[Vec<usize>], order: &[usize]) -> u32 {
    let n = adj.len();
    let mut burned = vec![false; n];
    let mut round = 1;
    loop {
        if round > 1 {
            burned = spread(adj, &burned);
            if burned.iter().all(|&b| b) {
                return round;
            }
        }
        let v = *order.iter().find(|&&v| !burned[v]).unwrap();
        burned[v] = true;
        if burned.iter().all(|&b| b) {
            return round;
        }
        round += 1;
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// (burning number, cooling number). Every legal source sequence is the
/// priority sequence of some vertex permutation.
pub fn brute_burn_cool(g: &Graph) -> (u32, u32) {
    assert!(g.order() <= 8);
    let adj = adjacency(g);
    let rounds: Vec<u32> = permutations(g.order()).iter().map(|p| rounds_with_priority(&adj, p)).collect();
    (*rounds.iter().min().unwrap(), *rounds.iter().max().unwrap())
}

fn subsets_of_size(pool: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if pool.len() < size {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets_of_size(&pool[1..], size - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, pool[0]);
            s
        })
        .collect();
    with.extend(subsets_of_size(&pool[1..], size));
    with
}

/// Plain minimax for the k-liminal game, no memo, no pruning. Burned
/// vertices are never revealed.
pub fn brute_liminal(g: &Graph, k: usize) -> u32 {
    let adj = adjacency(g);
    let n = adj.len();
    fn saboteur(adj: &[Vec<usize>], k: usize, burned: &[bool], revealed: &[bool]) -> u32 {
        let pool: Vec<usize> = (0..adj.len()).filter(|&v| !burned[v] && !revealed[v]).collect();
        let size = k.min(pool.len());
        subsets_of_size(&pool, size)
            .into_iter()
            .map(|s| {
                let mut r = revealed.to_vec();
                for v in s {
                    r[v] = true;
                }
                arsonist(adj, k, burned, &r)
            })
            .max()
            .unwrap()
    }
    fn arsonist(adj: &[Vec<usize>], k: usize, burned: &[bool], revealed: &[bool]) -> u32 {
        (0..adj.len())
            .filter(|&v| revealed[v] && !burned[v])
            .map(|v| {
                let mut b = burned.to_vec();
                b[v] = true;
                if b.iter().all(|&x| x) {
                    return 1;
                }
                let b = spread(adj, &b);
                if b.iter().all(|&x| x) {
                    return 2;
                }
                1 + saboteur(adj, k, &b, revealed)
            })
            .min()
            .expect("some revealed vertex is unburned")
    }
    saboteur(&adj, k, &vec![false; n], &vec![false; n])
}

/// A connected graph from a parent list (vertex i+1 hangs off parent[i] <= i)
/// plus extra edges.
pub fn connected_graph(parents: &[usize], extra: &[(usize, usize)]) -> Graph {
    let n = parents.len() + 1;
    let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1)).collect();
    for &(a, b) in extra {
        let (a, b) = (a % n, b % n);
        if a != b {
            edges.push((a, b));
        }
    }
    if edges.is_empty() {
        return liminal_core::path(1).unwrap();
    }
    Graph::from_edges(n, &edges).unwrap()
}
