use std::time::Instant;

fn main() {
    for n in [7, 8] {
        let t = Instant::now();
        let graphs = acr::generate::enumerate_graphs(n).unwrap();
        println!("n={n}: {} classes in {:?}", graphs.len(), t.elapsed());
    }
    // census-style pass: average cut-rank of everything on 8 vertices
    let t = Instant::now();
    let graphs = acr::generate::enumerate_graphs(8).unwrap();
    let mut sum = 0usize;
    for g in &graphs {
        let (_avg, max) = acr::cutrank::avg_and_max(g).unwrap();
        sum += max;
    }
    println!("avg+max over n=8: {:?} (checksum {sum})", t.elapsed());
}
