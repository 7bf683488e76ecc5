//! One line per criterion: `PASS`/`FAIL`, name, elapsed time, detail.
//! Exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use liminal_core::bounds::{g_bar, kings_bound, cube3_bound, non_square_check, q_poly, rat, ratio, strong_path_root, default_tolerance, Polynomial, Rational};
use liminal_core::burn::{cooling_sequence_strong, play_sequence};
use liminal_core::graph::{path, strong_path, Graph};
use liminal_core::report::{liminal_path_lower, liminal_path_upper};
use liminal_core::solve::{burning_number, cooling_number, liminal_value, Budget};
use liminal_core::tiling::{f_value, genfun};
use num::{BigInt, BigUint};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn b(g: &Graph) -> Result<u32, String> {
    burning_number(g, &Budget::burning()).map(|r| r.value).map_err(|e| e.to_string())
}

fn euler_maclaurin_identity() -> Check {
    for d in 1..=10u32 {
        let p = g_bar(d as usize).map_err(|e| e.to_string())?;
        let mut sum = BigInt::from(0);
        for m in 1..=1000i64 {
            sum += BigInt::from(2 * m - 1).pow(d);
            let got = p.eval(&rat(m));
            ensure(got == Rational::from_integer(sum.clone()), || format!("d={d} m={m}: {got} != {sum}"))?;
        }
    }
    Ok("d <= 10, m <= 1000, exact".into())
}

fn closed_form_recovery() -> Check {
    let want = [
        (1, Polynomial::from_integers(&[0, 0, 1])),
        (2, Polynomial::new(vec![rat(0), ratio(-1, 3), rat(0), ratio(4, 3)])),
        (3, Polynomial::from_integers(&[0, 0, -1, 0, 2])),
    ];
    for (d, p) in want {
        let got = g_bar(d).map_err(|e| e.to_string())?;
        ensure(got == p, || format!("g_bar({d}) = {got}, expected {p}"))?;
    }
    Ok("x^2, (4x^3 - x)/3, 2x^4 - x^2".into())
}

fn path_sharpness() -> Check {
    for n in 2..=5u64 {
        let g = path((n * n) as usize).map_err(|e| e.to_string())?;
        let v = b(&g)?;
        ensure(v as u64 == n, || format!("b(P_{}) = {v}, expected {n}", n * n))?;
        let r = strong_path_root(n * n, 1, &default_tolerance()).map_err(|e| e.to_string())?;
        ensure(r.is_integral && r.exact_root == Some(rat(n as i64)), || format!("root of q({}, 1) not exactly {n}", n * n))?;
    }
    Ok("b(P_{n^2}) = n and x* = n for n = 2..5".into())
}

fn bound_validity() -> Check {
    let mut detail = Vec::new();
    for n in 2..=8u64 {
        let kb = kings_bound(n).map_err(|e| e.to_string())?.bound;
        let v = b(&strong_path(n as usize, 2).map_err(|e| e.to_string())?)?;
        ensure(kb <= v as u64, || format!("kings n={n}: bound {kb} > b = {v}"))?;
        detail.push(format!("{kb}<={v}"));
    }
    for n in 2..=4u64 {
        let cb = cube3_bound(n).map_err(|e| e.to_string())?.bound;
        let v = b(&strong_path(n as usize, 3).map_err(|e| e.to_string())?)?;
        ensure(cb <= v as u64, || format!("cube n={n}: bound {cb} > b = {v}"))?;
        detail.push(format!("{cb}<={v}"));
    }
    Ok(format!("kings n=2..8, cube n=2..4: {}", detail.join(" ")))
}

fn exact_root_case() -> Check {
    let r = strong_path_root(2, 2, &default_tolerance()).map_err(|e| e.to_string())?;
    ensure(r.exact_root == Some(ratio(3, 2)), || format!("root of q(2, 2) is {:?}", r.exact_root))?;
    ensure(q_poly(2, 2).unwrap().eval(&ratio(3, 2)) == rat(0), || "q(3/2) != 0".into())?;
    let kb = kings_bound(2).map_err(|e| e.to_string())?.bound;
    let v = b(&strong_path(2, 2).unwrap())?;
    ensure(kb == 2 && v == 2, || format!("kings_bound(2) = {kb}, b = {v}"))?;
    Ok("x* = 3/2, kings_bound(2) = b = 2".into())
}

fn cooling() -> Check {
    for n in 2..=12 {
        let g = strong_path(n, 2).map_err(|e| e.to_string())?;
        let seq = cooling_sequence_strong(n, 2).map_err(|e| e.to_string())?;
        let rounds = play_sequence(&g, &seq).map_err(|e| e.to_string())?;
        ensure(rounds == n as u32, || format!("construction on n={n} lasts {rounds}"))?;
    }
    let cl = cooling_number(&strong_path(3, 2).unwrap(), &Budget::cooling()).map_err(|e| e.to_string())?.value;
    ensure(cl == 3, || format!("CL(strong_path(3,2)) = {cl}"))?;
    Ok("construction n = 2..12, exhaustive CL = 3".into())
}

fn liminal_endpoints() -> Check {
    let mut graphs: Vec<Graph> = (1..=10).map(|n| path(n).unwrap()).collect();
    graphs.push(strong_path(2, 2).unwrap());
    graphs.push(strong_path(3, 2).unwrap());
    for g in &graphs {
        let n = g.order();
        let cl = cooling_number(g, &Budget::cooling()).map_err(|e| e.to_string())?.value;
        let burn = b(g)?;
        let values: Vec<u32> = (1..=n)
            .map(|k| liminal_value(g, k, &Budget::liminal()).map(|r| r.value))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(values[0] == cl, || format!("{}: b_1 = {} != CL = {cl}", g.label(), values[0]))?;
        ensure(values[n - 1] == burn, || format!("{}: b_n = {} != b = {burn}", g.label(), values[n - 1]))?;
        ensure(values.windows(2).all(|w| w[1] <= w[0]), || format!("{}: sweep {values:?} increases", g.label()))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn path_sandwich() -> Check {
    for n in 1..=10u64 {
        for k in 1..=3u64 {
            let v = liminal_value(&path(n as usize).unwrap(), k as usize, &Budget::liminal())
                .map_err(|e| e.to_string())?
                .value as u64;
            let (lo, hi) = (liminal_path_lower(n, k), liminal_path_upper(n, k));
            ensure(lo <= v && v <= hi, || format!("n={n} k={k}: {v} outside [{lo}, {hi}]"))?;
        }
    }
    Ok("n <= 10, k <= 3".into())
}

fn two_liminal_report() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_liminal"))
        .args(["compare", "--suite", "paths", "--n-max", "7", "--k-max", "3"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("compare exited with {}", out.status))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    ensure(lines.next() == Some("n,k,minimax,formula,lower,upper,status"), || "unexpected header".into())?;
    let mut table = std::collections::BTreeMap::new();
    let mut k2 = Vec::new();
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        ensure(f.len() == 7, || format!("bad row {line:?}"))?;
        let parse = |s: &str| s.parse::<u64>().map_err(|_| format!("bad number in {line:?}"));
        let (n, k, v, lo, hi) = (parse(f[0])?, parse(f[1])?, parse(f[2])?, parse(f[4])?, parse(f[5])?);
        ensure(lo <= v && v <= hi, || format!("n={n} k={k}: {v} outside [{lo}, {hi}]"))?;
        table.insert((n, k), v);
        if k == 2 {
            let formula = parse(f[3])?;
            ensure(formula == (n + 2).div_ceil(3), || format!("formula column wrong at n={n}"))?;
            k2.push(format!("{n}:{v}/{formula}:{}", f[6]));
        }
    }
    ensure(k2.len() == 7, || "expected rows n = 1..7 for k = 2".into())?;
    for n in 1..=7 {
        for k in 1..3 {
            ensure(table[&(n, k + 1)] <= table[&(n, k)], || format!("n={n}: b_{} > b_{k}", k + 1))?;
        }
    }
    Ok(format!("n:minimax/formula:status {}", k2.join(" ")))
}

/// Orderings of the small tiles with the big tile inserted after `j` of them,
/// counted by the total length to its left.
fn brute_f(n: usize) -> Vec<u64> {
    fn go(tiles: &[usize], used: &mut Vec<bool>, left: usize, counts: &mut [u64], remaining: usize) {
        // the big tile may go here; the rest are ordered on the right
        let fact: u64 = (1..=remaining as u64).product();
        counts[left] += fact;
        for i in 0..tiles.len() {
            if !used[i] {
                used[i] = true;
                go(tiles, used, left + tiles[i], counts, remaining - 1);
                used[i] = false;
            }
        }
    }
    let tiles: Vec<usize> = (1..n).map(|i| 2 * i - 1).collect();
    let mut counts = vec![0; (n - 1) * (n - 1) + 1];
    go(&tiles, &mut vec![false; tiles.len()], 0, &mut counts, tiles.len());
    counts
}

fn genfun_vs_brute_force() -> Check {
    for n in 2..=6 {
        for (l, want) in brute_f(n).into_iter().enumerate() {
            let got = f_value(n, l).map_err(|e| e.to_string())?;
            ensure(got == BigUint::from(want), || format!("f({n}, {l}) = {got}, brute force {want}"))?;
        }
    }
    for n in 2..=20 {
        let total = genfun(n).map_err(|e| e.to_string())?.total();
        ensure(total == BigUint::from(1u8) << (n - 1), || format!("n={n}: total {total}"))?;
    }
    Ok("f exact for n <= 6; totals 2^(n-1) for n <= 20".into())
}

fn non_square_range() -> Check {
    match (2..=1_000_000u64).find(|&k| !non_square_check(k)) {
        None => Ok("2 <= k <= 10^6".into()),
        Some(k) => Err(format!("k = {k} gives a square")),
    }
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("euler-maclaurin identity", euler_maclaurin_identity, Duration::from_secs(10)),
        ("closed-form recovery", closed_form_recovery, Duration::from_secs(10)),
        ("path sharpness", path_sharpness, Duration::from_secs(60)),
        ("bound validity", bound_validity, Duration::from_secs(600)),
        ("exact-root case", exact_root_case, Duration::from_secs(10)),
        ("cooling", cooling, Duration::from_secs(300)),
        ("liminal endpoints and shape", liminal_endpoints, Duration::from_secs(900)),
        ("path sandwich", path_sandwich, Duration::from_secs(60)),
        ("2-liminal comparison report", two_liminal_report, Duration::from_secs(120)),
        ("generating function vs brute force", genfun_vs_brute_force, Duration::from_secs(30)),
        ("non-square check", non_square_range, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(d) if elapsed > limit => Err(format!("{d}; took longer than {limit:?}")),
            r => r,
        };
        match result {
            Ok(detail) => println!("PASS  {name}  ({elapsed:.2?})  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}  ({elapsed:.2?})  {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", 11 - failed, 11);
    if failed > 0 {
        std::process::exit(1);
    }
}
