fn main() {
    println!("galileq: CLI under construction");
}
