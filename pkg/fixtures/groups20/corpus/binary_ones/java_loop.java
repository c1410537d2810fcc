static int binaryOnes(int n) {
    if (n <= 0) {
        return 0;
    }
    int count = 0;
    int k = n;
    while (k > 0) {
        count += k & 1;
        k = k >> 1;
    }
    return count;
}
