#![allow(dead_code)]

use avoidgray::regular::{build_c_list, lookup, Direction};
use avoidgray::schroder::{build_s_paths, phi};
use avoidgray::Permutation;

const D6: &str = include_str!("../fixtures/d6_231.txt");
const S3: &str = include_str!("../fixtures/s3_phi3.txt");
const S4: &str = include_str!("../fixtures/s4_phi4.txt");
const C5: &str = include_str!("../fixtures/c5_321.txt");

/// Rows of the printed path lists whose word repeats a neighbour's.
pub const MISPRINTED_S3: &[usize] = &[13];
pub const MISPRINTED_S4: &[usize] = &[13, 32, 78];

pub fn d6_lines() -> Vec<&'static str> {
    D6.lines().collect()
}

pub struct PathRow {
    pub row: usize,
    pub word: String,
    pub image: String,
}

fn path_rows(src: &str) -> Vec<PathRow> {
    src.lines()
        .map(|l| {
            let mut it = l.split_whitespace();
            PathRow {
                row: it.next().unwrap().parse().unwrap(),
                word: it.next().unwrap().to_string(),
                image: it.next().unwrap().to_string(),
            }
        })
        .collect()
}

/// The printed list of semilength `n`, for `n` in `{3, 4}`.
pub fn printed_paths(n: usize) -> Vec<PathRow> {
    match n {
        3 => path_rows(S3),
        4 => path_rows(S4),
        _ => panic!("no printed list for n={n}"),
    }
}

pub fn misprinted(n: usize) -> &'static [usize] {
    match n {
        3 => MISPRINTED_S3,
        4 => MISPRINTED_S4,
        _ => &[],
    }
}

pub struct PathComparison {
    pub rows: usize,
    pub expected_rows: usize,
    /// `(row, printed, generated)` for every word that differs.
    pub word_mismatches: Vec<(usize, String, String)>,
    pub image_mismatches: Vec<(usize, String, String)>,
}

impl PathComparison {
    pub fn mismatched_rows(&self) -> Vec<usize> {
        self.word_mismatches.iter().map(|m| m.0).collect()
    }

    /// Every differing word matches the generated word of an adjacent row.
    pub fn mismatches_are_neighbour_repeats(&self, generated: &[String]) -> bool {
        self.word_mismatches.iter().all(|(row, printed, _)| {
            let i = row - 1;
            (i > 0 && &generated[i - 1] == printed) || generated.get(i + 1) == Some(printed)
        })
    }

    pub fn acceptable(&self, n: usize, generated: &[String]) -> bool {
        self.rows == self.expected_rows
            && self.image_mismatches.is_empty()
            && self.mismatched_rows() == misprinted(n)
            && self.mismatches_are_neighbour_repeats(generated)
    }
}

pub fn compare_paths(n: usize) -> (PathComparison, Vec<String>) {
    let printed = printed_paths(n);
    let paths = build_s_paths(n);
    let generated: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
    let mut cmp = PathComparison {
        rows: printed.len(),
        expected_rows: paths.len(),
        word_mismatches: Vec::new(),
        image_mismatches: Vec::new(),
    };
    for (row, (path, word)) in printed.iter().zip(paths.iter().zip(&generated)) {
        if &row.word != word {
            cmp.word_mismatches
                .push((row.row, row.word.clone(), word.clone()));
        }
        let image = phi(path).to_digits();
        if row.image != image {
            cmp.image_mismatches
                .push((row.row, row.image.clone(), image));
        }
    }
    (cmp, generated)
}

pub fn c5_321() -> Vec<(Permutation, Direction)> {
    C5.lines()
        .map(|l| {
            let (w, d) = l.split_once(' ').unwrap();
            let dir = match d {
                "up" => Direction::Up,
                "down" => Direction::Down,
                _ => panic!("bad direction {d}"),
            };
            (Permutation::from_digits(w).unwrap(), dir)
        })
        .collect()
}

pub fn generated_c5_321() -> Vec<(Permutation, Direction)> {
    build_c_list(&lookup("321", None).unwrap(), 5)
        .unwrap()
        .entries
        .into_iter()
        .map(|d| (d.perm, d.direction))
        .collect()
}

/// The path whose dot diagram yields the worked σ-sequence below.
pub const EXAMPLE_PATH: &str = "uueudddued";
/// `(k, l)` for `s_k ... s_l`, in selection order.
pub const EXAMPLE_FACTORS: [(usize, usize); 4] = [(6, 5), (4, 1), (3, 1), (2, 2)];
pub const EXAMPLE_IMAGE: &str = "5246713";
