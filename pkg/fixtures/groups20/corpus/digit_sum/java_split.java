static int lastDigit(int k) {
    return Math.abs(k) % 10;
}

static int digitSum(int n) {
    int m = n < 0 ? -n : n;
    int total = 0;
    while (m > 0) {
        total += lastDigit(m);
        m = m / 10;
    }
    return total;
}
