static int shiftBase(int k) {
    return k - 100;
}

static int absDiff100(int n) {
    int d = shiftBase(n);
    return d < 0 ? -d : d;
}
