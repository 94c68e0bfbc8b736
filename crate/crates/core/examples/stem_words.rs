//! Stems words read from stdin, one per line, printing "word stem".
use classdoc_core::textproc::porter_stem;
use std::io::BufRead;

fn main() {
    let stdin = std::io::stdin();
    for line in stdin.lock().lines() {
        let w = line.unwrap();
        let w = w.trim();
        if !w.is_empty() {
            println!("{} {}", w, porter_stem(w));
        }
    }
}
