static int firstFactor(int k) {
    if (k < 2) {
        return 1;
    }
    for (int i = 2; i * i <= k; i++) {
        if (k % i == 0) {
            return i;
        }
    }
    return k;
}

static boolean isPrime(int n) {
    return n >= 2 && firstFactor(n) == n;
}
