static int fibClamped(int n) {
    if (n < 0) {
        return 0;
    }
    int k = n > 40 ? 40 : n;
    int prev = 0;
    int cur = 1;
    int i = 0;
    while (i < k) {
        int next = prev + cur;
        prev = cur;
        cur = next;
        i++;
    }
    return prev;
}
