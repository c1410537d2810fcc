static int remainderByTwelve(int k) {
    return (k % 12 + 12) % 12;
}

static int gcdTwelve(int n) {
    int a = 12;
    int b = remainderByTwelve(n);
    while (b != 0) {
        int r = a % b;
        a = b;
        b = r;
    }
    return a;
}
