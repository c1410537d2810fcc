static int doubleT(int k) {
    return k * (k + 1);
}

static int triangular(int n) {
    if (n <= 0) {
        return 0;
    }
    return doubleT(n) / 2;
}
