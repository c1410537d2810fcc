static int binaryOnes(int n) {
    int count = 0;
    for (int k = n; k > 0; k = k >> 1) {
        count += k & 1;
    }
    return count;
}
