static int absDiff100(int n) {
    int d = n - 100;
    if (d < 0) {
        d = -d;
    }
    return d;
}
