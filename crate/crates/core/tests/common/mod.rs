//! Direct-summation reference implementation, written from the formulas
//! alone and sharing no code with the library.

#![allow(dead_code)]

pub type Element = Vec<(f64, f64)>;

/// Merges equal values, drops zero probabilities, sorts ascending.
pub fn canonical(raw: &[(f64, f64)]) -> Element {
    let mut out: Element = Vec::new();
    for &(v, p) in raw {
        if p == 0.0 {
            continue;
        }
        match out.iter_mut().find(|(w, _)| *w == v) {
            Some(slot) => slot.1 += p,
            None => out.push((v, p)),
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

pub fn pi(p: f64, q: f64) -> f64 {
    if (p - q).abs() <= 1e-12 {
        (p + q) / 2.0
    } else {
        (p - q).abs()
    }
}

pub fn r1(x: f64, y: f64) -> f64 {
    let s = x + y - x * y;
    (1.0 - (1.0 - 4.0 * x * y).abs() / 3.0) * (1.0 - (4.0 * s - 3.0).abs() / 3.0)
}

pub fn r2(x: f64, y: f64) -> f64 {
    let s = x + y - x * y;
    let first = 2.0 / 3.0 * (f64::min(1.0 - 2.0 * x * y, x * y) + 1.0);
    let second = 2.0 / 3.0 * (f64::min(2.0 * s - 1.0, 2.0 - 2.0 * s) + 1.0);
    first * second
}

pub fn f1(x: f64, y: f64) -> f64 {
    let d = (x - y).abs();
    2.0 * d / (1.0 + d)
}

pub fn f2(x: f64, y: f64) -> f64 {
    let d = (x - y).abs();
    (1.0 + d).ln() / 2f64.ln()
}

pub fn f3(x: f64, y: f64) -> f64 {
    let d = (x - y).abs();
    d * (d - 1.0).exp()
}

pub fn fuzziness(e: &Element, r: fn(f64, f64) -> f64) -> f64 {
    let l = e.len() as f64;
    let mut total = 0.0;
    for i in 0..e.len() {
        for j in i..e.len() {
            total += r(e[i].0, e[j].0) * pi(e[i].1, e[j].1);
        }
    }
    2.0 / (l * (l + 1.0)) * total
}

pub fn nonspecificity(e: &Element, f: fn(f64, f64) -> f64) -> f64 {
    let l = e.len() as f64;
    let mut total = 0.0;
    for i in 0..e.len() {
        for j in i..e.len() {
            let base = f(e[i].0, e[j].0);
            if base != 0.0 {
                total += base.powf(pi(e[i].1, e[j].1));
            }
        }
    }
    2.0 / f64::max(2.0, l * (l - 1.0)) * total
}

pub fn combine(theta: &str, x: f64, y: f64) -> f64 {
    match theta {
        "max" => x.max(y),
        "psum" => x + y - x * y,
        "bsum" => (x + y).min(1.0),
        _ => panic!("unknown combiner {theta}"),
    }
}

pub fn fuzziness_kernel(id: &str) -> fn(f64, f64) -> f64 {
    match id {
        "r1" => r1,
        "r2" => r2,
        _ => panic!("unknown kernel {id}"),
    }
}

pub fn nonspecificity_kernel(id: &str) -> fn(f64, f64) -> f64 {
    match id {
        "f1" => f1,
        "f2" => f2,
        "f3" => f3,
        _ => panic!("unknown kernel {id}"),
    }
}

/// `("r1", "f2", "max")` and so on, combiner outermost.
pub fn all_configs() -> Vec<(&'static str, &'static str, &'static str)> {
    let mut out = Vec::new();
    for theta in ["max", "psum", "bsum"] {
        for r in ["r1", "r2"] {
            for f in ["f1", "f2", "f3"] {
                out.push((r, f, theta));
            }
        }
    }
    out
}

pub fn comprehensive(e: &Element, r: &str, f: &str, theta: &str) -> f64 {
    combine(
        theta,
        fuzziness(e, fuzziness_kernel(r)),
        nonspecificity(e, nonspecificity_kernel(f)),
    )
}

/// Every raw element of length 1..=3 over the value grid with probabilities
/// in quarter steps, zeros and repeated values included.
pub fn grid_elements() -> Vec<Vec<(f64, f64)>> {
    let values = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut out = Vec::new();
    for len in 1..=3usize {
        let mut probs = Vec::new();
        quarter_compositions(len, 4, &mut Vec::new(), &mut probs);
        let mut tuples = vec![vec![]];
        for _ in 0..len {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<f64>| {
                    values.iter().map(move |&v| {
                        let mut t = t.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        for t in &tuples {
            for p in &probs {
                out.push(t.iter().copied().zip(p.iter().copied()).collect());
            }
        }
    }
    out
}

fn quarter_compositions(len: usize, left: u32, cur: &mut Vec<f64>, out: &mut Vec<Vec<f64>>) {
    if cur.len() + 1 == len {
        cur.push(f64::from(left) / 4.0);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for k in 0..=left {
        cur.push(f64::from(k) / 4.0);
        quarter_compositions(len, left - k, cur, out);
        cur.pop();
    }
}
