fn main() {
    println!("portham");
}
