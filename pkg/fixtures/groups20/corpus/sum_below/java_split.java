static int halfProduct(int m) {
    return m * (m - 1) / 2;
}

static int sumBelow(int n) {
    if (n <= 0) {
        return 0;
    }
    return halfProduct(n);
}
