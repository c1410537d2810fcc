static int absValue(int k) {
    return Math.abs(k);
}

static int countDivisors(int n) {
    int m = absValue(n);
    if (m == 0) {
        return 0;
    }
    int count = 0;
    for (int i = 1; i <= m; i++) {
        if (m % i == 0) {
            count++;
        }
    }
    return count;
}
