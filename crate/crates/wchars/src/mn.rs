//! Murnaghan-Nakayama rule for the symmetric and hyperoctahedral groups.

pub type Partition = Vec<usize>;

/// Partitions of `n` in reverse lexicographic order, `[n]` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(n, n, &mut vec![], &mut out);
    out
}

/// Pairs `(alpha, beta)` with `|alpha| + |beta| = n`, `|alpha|` decreasing.
pub fn bipartitions(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = vec![];
    for k in (0..=n).rev() {
        for a in partitions(k) {
            for b in partitions(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

fn beta_set(l: &[usize], len: usize) -> Vec<usize> {
    (0..len).map(|i| l.get(i).copied().unwrap_or(0) + len - 1 - i).collect()
}

/// All ways to remove an `r`-rim hook, as (new beta set, sign).
fn remove_hooks(beta: &[usize], r: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = vec![];
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut nb = beta.to_vec();
        nb[i] = b - r;
        out.push((nb, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn chi_beta(beta: &[usize], mu: &[usize]) -> i64 {
    match mu.split_first() {
        None => 1,
        Some((&r, rest)) => remove_hooks(beta, r).iter().map(|(nb, s)| s * chi_beta(nb, rest)).sum(),
    }
}

/// `chi^lambda` on the class of cycle type `mu`.
pub fn char_a(lambda: &[usize], mu: &[usize]) -> i64 {
    let n: usize = mu.iter().sum();
    chi_beta(&beta_set(lambda, n.max(1)), mu)
}

fn chi_b(a: &[usize], b: &[usize], pos: &[usize], neg: &[usize]) -> i64 {
    let (r, rest_pos, rest_neg, eps) = match (pos.split_first(), neg.split_first()) {
        (Some((&r, rest)), _) => (r, rest, neg, 1),
        (None, Some((&r, rest))) => (r, pos, rest, -1),
        (None, None) => return 1,
    };
    let mut total = 0;
    for (na, s) in remove_hooks(a, r) {
        total += s * chi_b(&na, b, rest_pos, rest_neg);
    }
    for (nb, s) in remove_hooks(b, r) {
        total += eps * s * chi_b(a, &nb, rest_pos, rest_neg);
    }
    total
}

/// `chi^(alpha, beta)` on the class with positive cycles `pos` and negative
/// cycles `neg`; `((n), ())` is trivial and `((), (1^n))` is the sign.
pub fn char_b(alpha: &[usize], beta: &[usize], pos: &[usize], neg: &[usize]) -> i64 {
    let n = pos.iter().sum::<usize>() + neg.iter().sum::<usize>();
    chi_b(&beta_set(alpha, n.max(1)), &beta_set(beta, n.max(1)), pos, neg)
}

pub fn format_partition(p: &[usize]) -> String {
    format!("{p:?}").replace(' ', "")
}

pub fn parse_partition(s: &str) -> Option<Partition> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.is_empty() {
        return Some(vec![]);
    }
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// `"21.1"` style label of a bipartition (parts are single digits here).
pub fn format_bipartition(a: &[usize], b: &[usize]) -> String {
    let f = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<String>();
    format!("{}.{}", f(a), f(b))
}

pub fn parse_bipartition(s: &str) -> Option<(Partition, Partition)> {
    let (a, b) = s.split_once('.')?;
    let f = |x: &str| x.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<Vec<_>>>();
    Some((f(a)?, f(b)?))
}
