static int absDiff100(int n) {
    return Math.abs(n - 100);
}
