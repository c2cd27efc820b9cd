//! In-process driver for the `qq` command surface.
#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn qq(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qquiver_cli::run(std::iter::once("qq").chain(args.iter().copied()), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).expect("utf-8 output"),
        stderr: String::from_utf8(err).expect("utf-8 output"),
    }
}

/// Writes `text` to a fresh file under the target directory.
pub fn temp_file(name: &str, text: &str) -> String {
    let dir: PathBuf = [env!("CARGO_TARGET_TMPDIR"), "qq-tests"].iter().collect();
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

/// The quiver whose monoid has module type `(kn, k^2 n)`: `k` source copies
/// of a size-`n` vertex and one range copy of a size-`kn` vertex.
pub fn module_type_qq(n: usize, k: usize) -> String {
    format!(
        "[vertices]\nsmall {n}\nbig {kn}\n[edges]\ne {kn}\n[source]\nsmall e {k}\n[range]\nbig e 1\n",
        kn = k * n
    )
}

pub const QQ_FIXTURES: [&str; 7] = ["worked_example.qq", "c2c4.qq", "c2m4.qq", "m3_a.qq", "m3_b.qq", "c3m3.qq", "cm2.qq"];
pub const GRAPH_FIXTURES: [&str; 3] = ["loop.graph", "two_loops.graph", "three_edges.graph"];

/// `count` inputs: fixture texts with random character and line edits,
/// random token soup, and raw random characters.
pub fn fuzz_inputs(seed: u64, count: usize) -> Vec<String> {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<String> = QQ_FIXTURES
        .iter()
        .map(|f| std::fs::read_to_string(fixture(f)).unwrap())
        .collect();
    let alphabet: Vec<char> = "[]#\n \t0123456789abvexyz_.-+σ\u{0}\u{feff}é]".chars().collect();
    let tokens = [
        "[vertices]", "[edges]", "[source]", "[range]", "[embedding.source]", "[embedding.range]",
        "[bogus]", "v1", "a4", "x", "m", "0", "1", "2", "3", "99999999999999999999999", "-1", "#", "\n",
    ];
    (0..count)
        .map(|k| match k % 3 {
            0 => {
                let mut chars: Vec<char> = seeds.choose(&mut rng).unwrap().chars().collect();
                for _ in 0..rng.gen_range(1..6) {
                    let at = rng.gen_range(0..=chars.len());
                    match rng.gen_range(0..3) {
                        0 if at < chars.len() => {
                            chars.remove(at);
                        }
                        1 if at < chars.len() => chars[at] = *alphabet.choose(&mut rng).unwrap(),
                        _ => chars.insert(at, *alphabet.choose(&mut rng).unwrap()),
                    }
                }
                chars.into_iter().collect()
            }
            1 => {
                let mut lines: Vec<&str> = seeds.choose(&mut rng).unwrap().lines().collect();
                lines.shuffle(&mut rng);
                lines.truncate(rng.gen_range(0..=lines.len()));
                let mut text = lines.join("\n");
                for _ in 0..rng.gen_range(0..4) {
                    text.push_str(tokens.choose(&mut rng).unwrap());
                    text.push(' ');
                }
                text
            }
            _ => (0..rng.gen_range(0..80)).map(|_| *alphabet.choose(&mut rng).unwrap()).collect(),
        })
        .collect()
}
