// CLI entry point; implemented after the library core.
int main() { return 0; }
